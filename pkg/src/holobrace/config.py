"""설정 관리 모듈."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """애플리케이션 설정."""

    model_config = SettingsConfigDict(
        env_prefix="HOLOBRACE_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    max_orbit: int = Field(
        default=65536,
        ge=1,
        description="켤레 궤도 크기 상한",
    )
    max_group_order: int = Field(
        default=64,
        ge=1,
        description="자기동형군을 전수 열거할 수 있는 |G| 상한",
    )
    oracle_max_holomorph: int = Field(
        default=5000,
        ge=1,
        description="브루트포스 오라클이 허용하는 |Hol(G)| 상한",
    )
    element_table_limit: int = Field(
        default=131072,
        ge=0,
        description="원소 → 지수 벡터 전체 테이블을 만드는 |S| 상한",
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="full-run 프로세스 풀 크기",
    )


settings = Settings()
