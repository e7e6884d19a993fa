"""샤드 파일, 컨텍스트 디렉터리, 작업 실행."""

from holobrace.orchestrator.context import ContextStore, load_context, save_context
from holobrace.orchestrator.jobs import merge_shards, run_job, split_layer
from holobrace.orchestrator.pipeline import RunResult, full_run
from holobrace.orchestrator.shards import (
    ShardFile,
    decode_record,
    encode_record,
    read_shard,
    write_shard,
)

__all__ = [
    "ContextStore",
    "RunResult",
    "ShardFile",
    "decode_record",
    "encode_record",
    "full_run",
    "load_context",
    "merge_shards",
    "read_shard",
    "run_job",
    "save_context",
    "split_layer",
    "write_shard",
]
