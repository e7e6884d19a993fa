"""예외 정의."""


class HolobraceError(Exception):
    """holobrace 예외의 공통 부모."""


class InvalidGroupError(HolobraceError, ValueError):
    """잘못된 인수 목록, 그룹 서술자, 순열."""


class GroupTooLargeError(HolobraceError):
    """데스크 규모 한계를 넘는 입력."""


class InsolubleGroupError(HolobraceError):
    """유도열이 1에 도달하지 않는다."""


class SeriesError(HolobraceError):
    """정규열 불변식 위반."""


class NotInGroupError(HolobraceError, ValueError):
    """원소가 주어진 군에 속하지 않는다."""


class OrbitOverflowError(HolobraceError):
    """켤레 궤도가 설정된 상한을 넘었다."""


class ShardFormatError(HolobraceError, ValueError):
    """샤드 파일 또는 인코딩 레코드가 손상되었다."""


class FingerprintMismatchError(HolobraceError):
    """샤드와 컨텍스트의 정규열 지문이 다르다."""


class BraceAxiomError(HolobraceError):
    """brace 호환 조건이 깨졌다 (열거 버그)."""
