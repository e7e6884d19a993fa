"""아벨 군의 홀로모프에서 정칙 부분군을 열거해 left brace를 만드는 도구."""

__version__ = "0.1.0"
