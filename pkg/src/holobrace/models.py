"""데이터 모델 정의."""

from pydantic import BaseModel, ConfigDict, Field

from holobrace.errors import ShardFormatError

SHARD_VERSION = "HBL1"


class ShardHeader(BaseModel):
    """샤드 파일의 첫 줄."""

    model_config = ConfigDict(frozen=True)

    version: str = Field(default=SHARD_VERSION, description="포맷 버전")
    descriptor: str = Field(description="군 서술자 (예: 2,2,4,4)")
    fingerprint: str = Field(description="정규열 지문 (16자리 hex)")
    layer: int = Field(ge=0, description="층 번호")
    count: int = Field(ge=0, description="레코드 수")

    def to_line(self) -> str:
        return (
            f"{self.version} {self.descriptor} {self.fingerprint} "
            f"layer={self.layer} n={self.count}"
        )

    @classmethod
    def from_line(cls, line: str) -> "ShardHeader":
        """헤더 줄을 파싱한다."""
        parts = line.rstrip("\n").split(" ")
        if len(parts) != 5 or parts[0] != SHARD_VERSION:
            raise ShardFormatError(f"bad shard header: {line!r}")
        version, descriptor, fingerprint, layer, count = parts
        if not layer.startswith("layer=") or not count.startswith("n="):
            raise ShardFormatError(f"bad shard header: {line!r}")
        try:
            return cls(
                version=version,
                descriptor=descriptor,
                fingerprint=fingerprint,
                layer=int(layer.removeprefix("layer=")),
                count=int(count.removeprefix("n=")),
            )
        except ValueError as e:
            raise ShardFormatError(f"bad shard header: {line!r}") from e


class SeriesFile(BaseModel):
    """사용자 지정 정규열 (``--series-file``)."""

    members: list[list[list[int]]] = Field(
        description="N_1 … N_{r-1} 의 생성원 (각 순열은 상 목록). S 와 1 은 생략"
    )


class ContextManifest(BaseModel):
    """컨텍스트 디렉터리의 ``context.json``."""

    descriptor: str = Field(description="군 서술자")
    strategy: str = Field(description="정규열 세분 전략")
    fingerprint: str = Field(description="정규열 지문")
    hol_generators: list[list[int]] = Field(description="Hol(G) 생성원")
    series: list[list[list[int]]] = Field(
        description="N_1 … N_{r-1} 의 생성원",
    )
    primes: list[int] = Field(description="pcgs 상대 위수")
    boundaries: list[int] = Field(description="층 경계 (N_i 가 시작하는 pcgs 위치)")
    pcgs: list[list[int]] = Field(description="pcgs 원소")
    target: int = Field(ge=1, description="찾는 정칙 부분군의 위수 |G|")


class LayerStat(BaseModel):
    """층별 통계 한 줄."""

    layer: int = Field(ge=0, description="층 번호")
    classes: int = Field(ge=0, description="켤레류 수")
    jobs: int = Field(default=1, ge=0, description="사용한 작업 수")


class GroupFingerprint(BaseModel):
    """Cayley 표로 주어진 군의 동형 불변량."""

    model_config = ConfigDict(frozen=True)

    order_counts: tuple[tuple[int, int], ...] = Field(
        description="(원소 위수, 개수) 목록"
    )
    abelian_invariants: tuple[int, ...] = Field(description="아벨화의 불변인자")
    center_order: int = Field(ge=1, description="중심의 위수")
    derived_order: int = Field(ge=1, description="교환자 부분군의 위수")

    @property
    def is_abelian(self) -> bool:
        return self.derived_order == 1

    def label(self) -> str:
        """표에 쓰는 짧은 문자열."""
        orders = " ".join(f"{o}^{c}" for o, c in self.order_counts)
        inv = "x".join(map(str, self.abelian_invariants)) or "1"
        return f"[{orders}] ab={inv} Z={self.center_order} D={self.derived_order}"
