"""정규열 테스트."""

import json
from pathlib import Path

import pytest

from holobrace.errors import InsolubleGroupError, SeriesError
from holobrace.groups.abelian import make_group
from holobrace.groups.holomorph import holomorph
from holobrace.groups.permgroup import PermGroup
from holobrace.groups.series import (
    SeriesStrategy,
    elementary_abelian_series,
    read_series_file,
    validate_series,
)


@pytest.fixture
def hol_c4() -> PermGroup:
    """Hol(C4) (8차 이면체군)."""
    return holomorph(make_group([4]))


def _members(series_members: tuple[PermGroup, ...]) -> list[list[tuple[int, ...]]]:
    return [list(m.generators) for m in series_members[1:-1]]


class TestElementaryAbelianSeries:
    """유도열 세분 테스트."""

    def test_hol_c4(self, hol_c4: PermGroup) -> None:
        """Hol(C4) 의 정규열이 8, 2, 1 인지 확인한다."""
        series = elementary_abelian_series(hol_c4)
        assert series.orders() == [8, 2, 1]
        assert series.primes == (2, 2)
        assert series.ranks == (2, 1)

    def test_hol_klein_four(self) -> None:
        """Hol(C2×C2) = S4 의 정규열이 24, 12, 4, 1 인지 확인한다."""
        series = elementary_abelian_series(holomorph(make_group([2, 2])))
        assert series.orders() == [24, 12, 4, 1]
        assert series.primes == (2, 3, 2)
        assert series.ranks == (1, 1, 2)

    def test_insoluble_holomorph(self) -> None:
        """Hol(C2×C2×C2) 는 가해군이 아니므로 거부하는지 확인한다."""
        with pytest.raises(InsolubleGroupError):
            elementary_abelian_series(holomorph(make_group([2, 2, 2])))

    @pytest.mark.parametrize("factors", [[8], [2, 4], [3, 3], [2, 8]])
    @pytest.mark.parametrize("strategy", ["power", "chief"])
    def test_series_is_valid(
        self, factors: list[int], strategy: SeriesStrategy
    ) -> None:
        """두 전략 모두 독립 검사기를 통과하는지 확인한다."""
        s = holomorph(make_group(factors))
        series = elementary_abelian_series(s, strategy)
        checked = validate_series(s, _members(series.members))
        assert checked.orders() == series.orders()
        assert series.orders()[-1] == 1

    def test_chief_refines_power(self) -> None:
        """주인자 전략의 층이 power 전략보다 적지 않은지 확인한다."""
        s = holomorph(make_group([2, 8]))
        power = elementary_abelian_series(s, "power")
        chief = elementary_abelian_series(s, "chief")
        assert chief.length >= power.length


class TestValidateSeries:
    """정규열 검사기 테스트."""

    def test_rejects_non_normal_member(self, hol_c4: PermGroup) -> None:
        """정규가 아닌 부분군을 거부하는지 확인한다."""
        with pytest.raises(SeriesError, match="not normal"):
            validate_series(hol_c4, [[(0, 3, 2, 1)]])

    def test_rejects_non_elementary_factor(self, hol_c4: PermGroup) -> None:
        """순환군 C4 인자를 거부하는지 확인한다."""
        with pytest.raises(SeriesError):
            validate_series(hol_c4, [[(1, 2, 3, 0)]])

    def test_series_file(self, hol_c4: PermGroup, tmp_path: Path) -> None:
        """JSON 정규열 파일을 읽어 검증하는지 확인한다."""
        path = tmp_path / "series.json"
        path.write_text(json.dumps({"members": [[[2, 3, 0, 1]]]}), encoding="utf-8")
        members = read_series_file(path, 4)
        assert validate_series(hol_c4, members).orders() == [8, 2, 1]

    def test_series_file_rejects_bad_permutation(self, tmp_path: Path) -> None:
        """순열이 아닌 항목을 거부하는지 확인한다."""
        path = tmp_path / "series.json"
        path.write_text(json.dumps({"members": [[[0, 0, 1, 2]]]}), encoding="utf-8")
        with pytest.raises(SeriesError):
            read_series_file(path, 4)
