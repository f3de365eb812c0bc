"""
mdrs command line
mdrs 명령행 인터페이스
JSON to stdout, CSV / word files to --out, logs to stderr.
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Literal, Optional

import structlog
from pydantic import BaseModel, Field

from .. import __version__
from ..analysis import (
    CurveKind,
    check_table,
    curve_summary,
    emit_curves,
    info_table,
    to_dataframe,
    write_csv,
)
from ..code import (
    decode_erasures,
    encode,
    format_symbols,
    get_code_manager,
    min_weight_exhaustive,
    min_weight_sampled,
    params_dict,
    rate_lower_bound,
    read_message,
    read_received,
    simulate_erasure_channel,
    write_symbols,
)
from ..analysis.curves import DEFAULT_Q
from ..code.params import CodeSpec
from ..config import get_settings
from ..errors import InvalidSettings, MDRSError, SeedRequired
from ..logging_config import configure_logging

logger = structlog.get_logger(__name__)

OutputFormat = Literal["json", "csv", "plain"]


class CliConfig(BaseModel):
    """Parsed flags merged with Settings"""

    command: Literal["params", "tables", "encode", "decode", "verify", "curves", "simulate"]
    p: Optional[int] = Field(None, ge=2)
    m: int = Field(1, ge=1)
    n: Optional[int] = Field(None, ge=1)
    d: Optional[int] = Field(None, ge=1)
    msg: Optional[str] = None
    rx: Optional[str] = None
    out: Optional[str] = None
    which: Literal["info", "checks"] = "info"
    kind: str = CurveKind.DIM2.value
    q: Optional[int] = Field(None, ge=2)
    dims: Optional[List[int]] = None
    lengths: Optional[List[int]] = None
    budget: int = Field(..., ge=1)
    trials: Optional[int] = Field(None, ge=1)
    seed: Optional[int] = Field(None, ge=0)
    epsilon: float = Field(0.0, ge=0.0, le=1.0)
    threads: int = Field(..., ge=1)
    format: Optional[OutputFormat] = None
    log_level: str = "WARNING"

    @property
    def randomized(self) -> bool:
        return self.command == "simulate" or (self.command == "verify" and self.trials is not None)


def _code_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="field characteristic (prime)")
    parser.add_argument("--m", type=int, default=1, help="extension degree, q = p^m (default: 1)")
    parser.add_argument("--n", type=int, required=True, help="number of variables / code dimension n")
    parser.add_argument("--d", type=int, required=True, help="designed minimum distance")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker cap (default: MDRS_THREADS)")
    common.add_argument("--format", choices=["json", "csv", "plain"], default=None, help="stdout format")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ... (default: MDRS_LOG_LEVEL)")

    parser = argparse.ArgumentParser(
        prog="mdrs",
        description="Multi-dimensional nonsystematic Reed-Solomon codes over GF(p^m)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    params = sub.add_parser("params", parents=[common], help="degree region, K, N-K and distance")
    _code_flags(params)

    tables = sub.add_parser("tables", parents=[common], help="information / check symbol tables")
    tables.add_argument("--which", choices=["info", "checks"], default="info")

    enc = sub.add_parser("encode", parents=[common], help="encode a message file")
    _code_flags(enc)
    enc.add_argument("--msg", required=True, help="message file (K symbols)")
    enc.add_argument("--out", help="codeword file (default: stdout)")

    dec = sub.add_parser("decode", parents=[common], help="decode a received word with ? erasures")
    _code_flags(dec)
    dec.add_argument("--rx", required=True, help="received-word file (N symbols or ?)")
    dec.add_argument("--out", help="message file (default: stdout)")

    verify = sub.add_parser("verify", parents=[common], help="minimum weight of the code")
    _code_flags(verify)
    verify.add_argument("--budget", type=int, default=None, help="max q^K for exhaustive scans (default: MDRS_BUDGET)")
    verify.add_argument("--trials", type=int, default=None, help="sample this many random messages instead")
    verify.add_argument("--seed", type=int, default=None)

    curves = sub.add_parser("curves", parents=[common], help="d/N vs K/N curve data")
    curves.add_argument("--kind", choices=[k.value for k in CurveKind], default=CurveKind.DIM2.value)
    curves.add_argument("--q", type=int, default=None, help="field order")
    curves.add_argument("--dims", type=int, nargs="+", default=None, help="n values for dim-sweep")
    curves.add_argument("--lengths", type=int, nargs="+", default=None, help="shortened lengths for gv-compare")
    curves.add_argument("--out", help="CSV path")

    sim = sub.add_parser("simulate", parents=[common], help="random erasure channel")
    _code_flags(sim)
    sim.add_argument("--epsilon", type=float, default=0.0, help="erasure probability per coordinate")
    sim.add_argument("--trials", type=int, default=100)
    sim.add_argument("--seed", type=int, default=None)

    return parser


def make_config(args: argparse.Namespace) -> CliConfig:
    settings = get_settings()
    values: Dict[str, Any] = {k: v for k, v in vars(args).items() if v is not None}
    budget = getattr(args, "budget", None)
    values["threads"] = settings.threads if args.threads is None else args.threads
    values["budget"] = settings.budget if budget is None else budget
    values["log_level"] = (args.log_level or settings.log_level).upper()
    config = CliConfig(**values)
    if settings.ci and config.randomized and config.seed is None:
        raise SeedRequired(f"MDRS_CI is set: `{config.command}` needs --seed")
    return config


def _spec(config: CliConfig) -> CodeSpec:
    return get_code_manager().spec(config.p, config.m, config.n, config.d)


def _emit(payload: Any, fmt: OutputFormat) -> None:
    if fmt == "plain" and isinstance(payload, dict):
        for key, value in payload.items():
            print(f"{key}: {json.dumps(value) if isinstance(value, (list, dict)) else value}")
        return
    print(json.dumps(payload, indent=2))


def cmd_params(config: CliConfig) -> None:
    spec = _spec(config)
    payload = params_dict(get_code_manager().region(spec))
    if spec.n == 2:
        payload["rateLowerBound"] = str(rate_lower_bound(spec))
    _emit(payload, config.format or "json")


def cmd_tables(config: CliConfig) -> None:
    table = info_table() if config.which == "info" else check_table()
    fmt = config.format or "plain"
    if fmt == "json":
        records = table.reset_index() if config.which == "checks" else table
        print(json.dumps({"which": config.which, "rows": json.loads(records.to_json(orient="records"))}, indent=2))
    elif fmt == "csv":
        sys.stdout.write(table.to_csv(index=config.which == "checks", lineterminator="\n"))
    else:
        print(table.to_string(index=config.which == "checks"))


def cmd_encode(config: CliConfig) -> None:
    spec = _spec(config)
    message = read_message(config.msg, get_code_manager().region(spec))
    codeword = encode(message)
    if config.out is None:
        sys.stdout.write(format_symbols(codeword.symbols))
        return
    write_symbols(config.out, codeword.symbols)
    _emit({"out": config.out, "N": spec.N, "K": message.region.K, "weight": codeword.weight}, config.format or "json")


def cmd_decode(config: CliConfig) -> None:
    spec = _spec(config)
    received = read_received(config.rx, spec)
    message = decode_erasures(received, get_code_manager().generator(spec))
    if config.out is None:
        sys.stdout.write(format_symbols(message.coeffs))
        return
    write_symbols(config.out, message.coeffs)
    _emit({"out": config.out, "K": message.region.K, "erased": len(received.pattern)}, config.format or "json")


def cmd_verify(config: CliConfig) -> None:
    spec = _spec(config)
    if config.trials is not None:
        report = min_weight_sampled(spec, config.trials, config.seed)
    else:
        report = min_weight_exhaustive(spec, budget=config.budget, threads=config.threads)
    _emit(report.to_dict(), config.format or "json")


def cmd_curves(config: CliConfig) -> None:
    kind = CurveKind(config.kind)
    points = emit_curves(kind, config.q, config.dims, config.lengths)
    if config.out is not None:
        write_csv(points, config.out)
    if config.format == "csv" and config.out is None:
        sys.stdout.write(to_dataframe(points).to_csv(index=False, lineterminator="\n", float_format="%.6f"))
        return
    q = config.q if config.q is not None else DEFAULT_Q[kind]
    summary = curve_summary(kind, q, points)
    if config.out is not None:
        summary["out"] = config.out
    _emit(summary, config.format or "json")


def cmd_simulate(config: CliConfig) -> None:
    report = simulate_erasure_channel(_spec(config), config.epsilon, config.trials, config.seed, config.threads)
    _emit(report.to_dict(), config.format or "json")


COMMANDS: Dict[str, Callable[[CliConfig], None]] = {
    "params": cmd_params,
    "tables": cmd_tables,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "verify": cmd_verify,
    "curves": cmd_curves,
    "simulate": cmd_simulate,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        level = args.log_level or get_settings().log_level
    except InvalidSettings:
        # reported below, once make_config reloads the settings
        level = "WARNING"
    configure_logging(level)
    try:
        config = make_config(args)
        logger.debug("command started", command=config.command)
        COMMANDS[config.command](config)
    except MDRSError as e:
        logger.warning("command failed", command=args.command, error=e.__class__.__name__, message=str(e))
        print(json.dumps(e.to_dict()))
        return e.exit_code
    except ValueError as e:
        logger.warning("invalid argument", command=args.command, message=str(e))
        print(json.dumps({"error": "InvalidArgument", "message": str(e)}))
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
