"""샤드 파일: 한 층의 류 대표를 정수 인코딩 레코드로 저장한다.

첫 줄은 ``HBL1 <서술자> <지문> layer=<i> n=<개수>``, 그 뒤로 레코드가
한 줄에 하나씩 ``n:v_1,…,v_n`` 형태로 온다. 줄 끝은 LF, 마지막 줄도 LF 로 끝난다.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

from holobrace.errors import FingerprintMismatchError, ShardFormatError
from holobrace.models import ShardHeader
from holobrace.pcgs.pcgs import Pcgs
from holobrace.pcgs.subgroups import RecordKey, SubgroupRecord, record_from_key

logger = logging.getLogger(__name__)


def encode_key(key: RecordKey) -> str:
    return f"{len(key)}:{','.join(map(str, key))}"


def encode_record(record: SubgroupRecord) -> str:
    """``n:v_1,…,v_n`` (``v_j`` 는 행 지수 벡터의 혼합 기수 정수)."""
    return encode_key(record.key)


def parse_line(line: str) -> RecordKey:
    """레코드 줄을 키로 읽는다. 행 수가 맞지 않으면 거부한다."""
    count, sep, body = line.strip().partition(":")
    if not sep:
        raise ShardFormatError(f"malformed record line: {line!r}")
    try:
        n = int(count)
        values = tuple(int(v) for v in body.split(",")) if body else ()
    except ValueError as e:
        raise ShardFormatError(f"malformed record line: {line!r}") from e
    if n != len(values) or any(v < 0 for v in values):
        raise ShardFormatError(f"record declares {n} rows, found {len(values)}")
    return values


def decode_record(line: str, pcgs: Pcgs, tail: int) -> SubgroupRecord:
    """레코드 줄을 꼬리 ``tail`` 인 정규 레코드로 되돌린다."""
    return record_from_key(pcgs, parse_line(line), tail)


@dataclass(frozen=True, slots=True)
class ShardFile:
    """헤더와 인코딩된 레코드 줄."""

    header: ShardHeader
    lines: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.lines)

    def keys(self) -> list[RecordKey]:
        return [parse_line(line) for line in self.lines]

    def records(self, pcgs: Pcgs, tail: int) -> list[SubgroupRecord]:
        return [decode_record(line, pcgs, tail) for line in self.lines]

    def render(self) -> str:
        return "".join(f"{line}\n" for line in [self.header.to_line(), *self.lines])

    def check(self, descriptor: str, fingerprint: str) -> None:
        """컨텍스트와 같은 군, 같은 정규열에서 나온 샤드인지 확인한다."""
        if self.header.descriptor != descriptor:
            raise FingerprintMismatchError(
                f"shard is for group {self.header.descriptor}, context is {descriptor}"
            )
        if self.header.fingerprint != fingerprint:
            raise FingerprintMismatchError(
                f"shard fingerprint {self.header.fingerprint} != context {fingerprint}"
            )


def make_shard(
    descriptor: str, fingerprint: str, layer: int, lines: Iterable[str]
) -> ShardFile:
    body = tuple(lines)
    header = ShardHeader(
        descriptor=descriptor, fingerprint=fingerprint, layer=layer, count=len(body)
    )
    return ShardFile(header, body)


def parse_shard(text: str) -> ShardFile:
    if not text.endswith("\n"):
        raise ShardFormatError("shard must end with a newline")
    head, *body = text[:-1].split("\n")
    header = ShardHeader.from_line(head)
    if len(body) != header.count:
        raise ShardFormatError(
            f"header declares {header.count} records, body has {len(body)}"
        )
    for line in body:
        parse_line(line)
    return ShardFile(header, tuple(body))


def read_shard(path: Path) -> ShardFile:
    try:
        return parse_shard(path.read_text(encoding="utf-8"))
    except ShardFormatError as e:
        raise ShardFormatError(f"{path}: {e}") from e


def atomic_write(path: Path, text: str) -> None:
    """임시 파일에 쓴 뒤 이름을 바꾼다. 실패하면 임시 파일을 지운다."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(f".{path.name}.tmp")
    try:
        with tmp.open("w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        tmp.replace(path)
    finally:
        tmp.unlink(missing_ok=True)


def write_shard(path: Path, shard: ShardFile) -> None:
    atomic_write(path, shard.render())
    logger.debug(f"wrote {path} ({len(shard)} records)")


def is_complete(path: Path, descriptor: str, fingerprint: str, layer: int) -> bool:
    """재개용: 헤더가 온전하고 같은 컨텍스트, 같은 층의 샤드인지."""
    if not path.exists():
        return False
    try:
        shard = read_shard(path)
        shard.check(descriptor, fingerprint)
    except (ShardFormatError, FingerprintMismatchError) as e:
        logger.warning(f"ignoring unusable shard {path}: {e}")
        return False
    return shard.header.layer == layer
