"""다순환 생성열과 부분군 레코드."""

from holobrace.pcgs.pcgs import Pcgs, pcgs_from_series, series_fingerprint
from holobrace.pcgs.subgroups import (
    PcPresentation,
    SubgroupRecord,
    igs,
    make_record,
    pc_presentation,
    record_from_key,
)

__all__ = [
    "PcPresentation",
    "Pcgs",
    "SubgroupRecord",
    "igs",
    "make_record",
    "pc_presentation",
    "pcgs_from_series",
    "record_from_key",
    "series_fingerprint",
]
