# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""Simple JSONL ledger of verification runs."""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional, Union

from src import logger


def _write_entry(path: Path, line: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a", encoding="utf-8") as log_file:
        log_file.write(line + "\n")


def record_run(
    ledger_path: Optional[Union[str, Path]],
    command: str,
    params: Dict[str, Any],
    outcome: Dict[str, Any],
) -> Optional[Dict[str, Any]]:
    """
    Persist a JSON line describing one command run.

    Args:
        ledger_path: Target JSONL file; ``None`` disables the ledger.
        command: Command name (e.g. "verify").
        params: Run parameters (rank, depth, strategy).
        outcome: Result summary (status, mismatch counts, per-side status).

    Returns:
        The written entry, or None when the ledger is disabled.
    """
    if not ledger_path:
        return None
    entry = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "command": command,
        "params": params,
        "outcome": outcome,
    }
    line = json.dumps(entry, default=str, sort_keys=True)
    _write_entry(Path(ledger_path), line)
    logger.debug(f"record_run: appended {command} entry to {ledger_path}")
    return entry
