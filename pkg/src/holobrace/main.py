"""CLI 엔트리포인트."""

import asyncio
import logging
from collections.abc import Callable
from enum import Enum
from pathlib import Path
from typing import Annotated

import typer
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from holobrace.braces import (
    brace_from_regular,
    brace_summary,
    format_brace,
    oracle_regular_classes,
)
from holobrace.errors import ShardFormatError
from holobrace.groups import parse_descriptor
from holobrace.groups.series import read_series_file
from holobrace.lifting import LiftingContext, build_context
from holobrace.models import LayerStat
from holobrace.orchestrator import (
    ContextStore,
    full_run,
    merge_shards,
    read_shard,
    run_job,
    split_layer,
    write_shard,
)
from holobrace.orchestrator.shards import ShardFile, atomic_write

console = Console()
logger = logging.getLogger(__name__)


class Strategy(str, Enum):
    """정규열 세분 전략."""

    power = "power"
    chief = "chief"


app = typer.Typer(
    name="holobrace",
    help="아벨 군 G 의 Hol(G) 정칙 부분군 켤레류를 층별로 열거해 left brace를 만듭니다.",
    no_args_is_help=True,
)

GroupOption = Annotated[
    str, typer.Option("--group", "-g", help="군 서술자 (예: 64, 2,32, 2,2,4,4)")
]
CtxOption = Annotated[Path, typer.Option("--ctx", help="컨텍스트 디렉터리")]


def _guarded(action: Callable[[], None]) -> None:
    """예외를 CLI 종료 코드로 바꾼다."""
    try:
        action()
    except KeyboardInterrupt:
        console.print("\n[dim]중단됨[/dim]")
        raise typer.Exit(0) from None
    except typer.Exit:
        raise
    except Exception as e:
        logger.debug("command failed", exc_info=True)
        console.print(f"[red]오류 발생: {e}[/red]")
        raise typer.Exit(1) from e


def _render_stats(stats: list[LayerStat]) -> None:
    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("Layer", justify="right")
    table.add_column("# classes", justify="right")
    table.add_column("# jobs", justify="right")
    for s in stats:
        table.add_row(str(s.layer), f"{s.classes:,}", str(s.jobs))
    console.print(table)


def _render_series(ctx: LiftingContext) -> None:
    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("Layer", justify="right")
    table.add_column("factor", justify="right")
    table.add_column("|N_i|", justify="right")
    orders = ctx.series.orders()
    table.add_row("0", "-", f"{orders[0]:,}")
    for lay in ctx.layers:
        table.add_row(
            str(lay.index), f"{lay.prime}^{lay.rank}", f"{orders[lay.index]:,}"
        )
    console.print(table)


def _final_shard(ctx: LiftingContext, final: Path) -> ShardFile:
    shard = read_shard(final)
    shard.check(ctx.group.descriptor, ctx.fingerprint())
    if shard.header.layer != ctx.depth:
        raise ShardFormatError(
            f"{final} holds layer {shard.header.layer}, final layer is {ctx.depth}"
        )
    return shard


def _render_braces(ctx: LiftingContext, shard: ShardFile) -> list[str]:
    """브레이스 블록을 만들고 곱셈군 지문별 요약을 출력한다."""
    braces = [
        brace_from_regular(ctx.pcgs, rec, ctx.group)
        for rec in shard.records(ctx.pcgs, ctx.pcgs.length)
    ]
    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("multiplicative group", style="bold")
    table.add_column("# braces", justify="right")
    for fp, count in brace_summary(braces):
        table.add_row(fp.label(), str(count))
    console.print(table)
    return [format_brace(b, line) for b, line in zip(braces, shard.lines, strict=True)]


@app.callback()
def callback(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="DEBUG 로그를 출력합니다")
    ] = False,
) -> None:
    """아벨 군 홀로모프의 정칙 부분군 열거."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


@app.command()
def series(
    group: GroupOption,
    out: Annotated[Path, typer.Option("--out", help="컨텍스트 디렉터리")],
    series_file: Annotated[
        Path | None, typer.Option("--series-file", help="JSON 정규열 파일")
    ] = None,
    strategy: Annotated[
        Strategy, typer.Option("--strategy", help="정규열 세분 전략")
    ] = Strategy.power,
) -> None:
    """정규열과 pcgs 를 만들어 컨텍스트 디렉터리에 저장합니다. layer-0.hbl 도 함께 씁니다."""

    def action() -> None:
        g = parse_descriptor(group)
        members = read_series_file(series_file, g.order) if series_file else None
        ctx = build_context(g, strategy.value, members)
        store = ContextStore(out)
        store.save(ctx)
        write_shard(store.layer_path(0), store.shard(ctx, 0, [ctx.root()]))
        store.save_stats([LayerStat(layer=0, classes=1, jobs=0)])
        _render_series(ctx)
        console.print(f"fingerprint: {ctx.fingerprint()}")

    _guarded(action)


@app.command()
def layer(
    ctx_dir: CtxOption,
    index: Annotated[int, typer.Option("--layer", help="만들 층 번호 i")],
    in_path: Annotated[Path, typer.Option("--in", help="층 i-1 샤드")],
    out_path: Annotated[Path, typer.Option("--out", help="층 i 출력 샤드")],
) -> None:
    """샤드 하나를 다음 층으로 들어올립니다.

    층 통계에는 이 작업 하나의 결과를 기록합니다. 여러 작업으로 나눴다면
    ``merge --ctx`` 가 합친 수로 바꿔 씁니다.
    """

    def action() -> None:
        store = ContextStore(ctx_dir)
        ctx = store.load()
        out = run_job(ctx, read_shard(in_path), index)
        write_shard(out_path, out)
        store.record_stat(LayerStat(layer=index, classes=len(out), jobs=1))
        console.print(f"classes: {len(out)}")

    _guarded(action)


@app.command()
def split(
    in_path: Annotated[Path, typer.Option("--in", help="나눌 샤드")],
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="작업 수 K")],
    out_prefix: Annotated[str, typer.Option("--out-prefix", help="출력 접두어")],
) -> None:
    """샤드를 K 개의 연속 구간으로 나눕니다."""

    def action() -> None:
        parts = split_layer(read_shard(in_path), jobs)
        for j, part in enumerate(parts):
            write_shard(Path(f"{out_prefix}-{j:03d}.hbl"), part)
        console.print(f"shards: {', '.join(str(len(p)) for p in parts)}")

    _guarded(action)


@app.command()
def merge(
    inputs: Annotated[list[Path], typer.Argument(help="같은 층의 샤드들")],
    out: Annotated[Path, typer.Option("--out", help="병합 결과 샤드")],
    ctx_dir: Annotated[
        Path | None, typer.Option("--ctx", help="층 통계를 기록할 컨텍스트 디렉터리")
    ] = None,
) -> None:
    """같은 층의 샤드를 정렬해 합칩니다."""

    def action() -> None:
        merged = merge_shards([read_shard(p) for p in inputs])
        write_shard(out, merged)
        if ctx_dir is not None:
            ContextStore(ctx_dir).record_stat(
                LayerStat(
                    layer=merged.header.layer, classes=len(merged), jobs=len(inputs)
                )
            )
        console.print(f"classes: {len(merged)}")

    _guarded(action)


@app.command()
def count(
    ctx_dir: CtxOption,
    final: Annotated[Path, typer.Option("--final", help="마지막 층 샤드")],
    braces: Annotated[
        bool, typer.Option("--braces", help="곱셈군 지문별 brace 수도 출력")
    ] = False,
) -> None:
    """마지막 층의 류 수와 층별 통계를 출력합니다."""

    def action() -> None:
        store = ContextStore(ctx_dir)
        ctx = store.load()
        shard = _final_shard(ctx, final)
        if stats := store.load_stats():
            _render_stats(stats)
        if braces:
            _render_braces(ctx, shard)
        console.print(f"classes: {len(shard)}")

    _guarded(action)


@app.command("export-braces")
def export_braces(
    ctx_dir: CtxOption,
    final: Annotated[Path, typer.Option("--final", help="마지막 층 샤드")],
    out: Annotated[Path, typer.Option("--out", help="brace 출력 파일")],
) -> None:
    """마지막 층의 모든 류를 brace 곱셈표로 내보냅니다."""

    def action() -> None:
        ctx = ContextStore(ctx_dir).load()
        shard = _final_shard(ctx, final)
        blocks = _render_braces(ctx, shard)
        atomic_write(out, "\n".join(blocks))
        console.print(f"braces: {len(blocks)} -> {out}")

    _guarded(action)


@app.command()
def oracle(group: GroupOption) -> None:
    """브루트포스로 정칙 부분군 켤레류 수를 셉니다."""

    def action() -> None:
        console.print(f"classes: {oracle_regular_classes(parse_descriptor(group))}")

    _guarded(action)


@app.command("full-run")
def full_run_command(
    group: GroupOption,
    out: Annotated[Path, typer.Option("--out", help="컨텍스트/출력 디렉터리")],
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="층마다 작업 수")] = 1,
    workers: Annotated[
        int | None, typer.Option("--workers", min=1, help="프로세스 풀 크기")
    ] = None,
    strategy: Annotated[
        Strategy, typer.Option("--strategy", help="정규열 세분 전략")
    ] = Strategy.power,
) -> None:
    """컨텍스트 생성부터 마지막 층까지 모두 실행합니다. 중단된 실행은 이어서 합니다."""

    def action() -> None:
        g = parse_descriptor(group)
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
            transient=True,
        ) as progress:
            progress.add_task(f"{g.descriptor} 층별 들어올림 중...", total=None)
            result = asyncio.run(full_run(g, out, jobs, workers, strategy.value))
        _render_stats(result.stats)
        console.print(f"classes: {result.classes}")

    _guarded(action)


if __name__ == "__main__":
    app()
