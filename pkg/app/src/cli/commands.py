# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Command implementations.

Each command takes a validated RunConfig and returns a CommandResult; the entry point
only prints or writes the text and exits with the code.
"""

from src.cli import EXIT_MISMATCH, EXIT_OK, CommandResult, command_error_handler
from src.cli.serializers import (
    ENUMERATE_COLUMNS,
    element_record,
    enumerate_record,
    record_to_tsv,
    records_to_tsv,
    report_record,
    report_to_tsv,
    status_text,
    to_json,
)
from src.common.audit import record_run
from src.common.config import get_settings
from src.crystal.libs.graph_helpers import coefficient_label, render_dot
from src.crystal.series import enumerate_crystal, verify_all
from src.crystal.strings import lusztig_to_tableau, parse_lusztig, parse_string_param, to_lusztig
from src.crystal.tableaux import f, format_tableau, parse_tableau, seg
from src.models.run_config import RunConfig
from src import logger


def _render(cfg: RunConfig, record) -> str:
    return record_to_tsv(record) if cfg.format == "tsv" else to_json(record)


def _check_inferred_rank(cfg: RunConfig, rank: int) -> None:
    if rank > cfg.max_rank:
        raise ValueError(f"rank {rank} exceeds the configured limit {cfg.max_rank}")


@command_error_handler("enumerate the crystal")
def cmd_enumerate(cfg: RunConfig) -> CommandResult:
    elements = enumerate_crystal(cfg.rank, cfg.depth, cfg.strategy)
    records = [enumerate_record(b) for b in elements]
    logger.info(f"enumerate: r={cfg.rank} D={cfg.depth} records={len(records)}")
    if cfg.format == "tsv":
        return CommandResult(text=records_to_tsv(records, ENUMERATE_COLUMNS))
    return CommandResult(text=to_json(records))


@command_error_handler("verify the identity")
def cmd_verify(cfg: RunConfig) -> CommandResult:
    """Exit 0 when every side matches the product, 2 otherwise."""
    report = verify_all(cfg.rank, cfg.depth, cfg.strategy)
    status = status_text(report.matched)
    logger.info(f"verify: r={cfg.rank} D={cfg.depth} {status}")
    ledger = get_settings().AUDIT_PATH
    try:
        record_run(
            ledger,
            "verify",
            {"rank": cfg.rank, "depth": cfg.depth, "strategy": cfg.strategy},
            {
                "status": status,
                "mismatches": report.mismatch_count(),
                "terms": max((side.terms_checked for side in report.sides.values()), default=0),
                "sides": {name: status_text(side.matched) for name, side in report.sides.items()},
            },
        )
    except OSError as e:
        logger.error(f"verify: could not append to ledger {ledger}: {e}")
    text = report_to_tsv(report) if cfg.format == "tsv" else to_json(report_record(report))
    return CommandResult(exit_code=EXIT_OK if report.matched else EXIT_MISMATCH, text=text)


@command_error_handler("build the crystal graph")
def cmd_graph(cfg: RunConfig) -> CommandResult:
    """Nodes of height <= D in canonical order, edges b -> f_i b between displayed nodes."""
    elements = enumerate_crystal(cfg.rank, cfg.depth, cfg.strategy)
    index = {b: position for position, b in enumerate(elements)}
    edges = []
    for position, b in enumerate(elements):
        for i in range(1, cfg.rank + 1):
            target = index.get(f(b, i))
            if target is not None:
                edges.append((position, target, i))
    labels = [format_tableau(b) for b in elements]
    attributes = None
    if cfg.coefficients:
        labels = [f"{label}\n{coefficient_label(seg(b))}" for label, b in zip(labels, elements)]
        attributes = [{"seg": seg(b)} for b in elements]
    logger.info(f"graph: r={cfg.rank} D={cfg.depth} nodes={len(elements)} edges={len(edges)}")
    return CommandResult(text=render_dot(f"Tinf_r{cfg.rank}", labels, edges, attributes))


@command_error_handler("compute the parametrizations")
def cmd_param(cfg: RunConfig) -> CommandResult:
    b = parse_tableau(cfg.element, rank=cfg.rank)
    _check_inferred_rank(cfg, b.rank)
    return CommandResult(text=_render(cfg, element_record(b)))


@command_error_handler("convert the datum")
def cmd_convert(cfg: RunConfig) -> CommandResult:
    """Accept a Lusztig datum or a string triangle and report the element it names."""
    if cfg.kind == "string":
        c = to_lusztig(parse_string_param(cfg.element, rank=cfg.rank))
    else:
        c = parse_lusztig(cfg.element, rank=cfg.rank)
    _check_inferred_rank(cfg, c.rank)
    b = lusztig_to_tableau(c)
    record = {"input": cfg.element, "kind": cfg.kind}
    record.update(element_record(b))
    return CommandResult(text=_render(cfg, record))


COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "graph": cmd_graph,
    "param": cmd_param,
    "convert": cmd_convert,
}
