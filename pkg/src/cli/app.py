"""
inflation-spectra command line.

Each subcommand builds an event (the RunConfig fields given on the command line)
and hands it to the handler in src/<command>/app.py.
"""
import argparse
import importlib
import sys
from typing import List, Optional

from inflation.config.logging_config import configure_logging
from inflation.config.settings import OUTPUT_FORMATS
from inflation.logger import get_logger

configure_logging()

logger = get_logger("cli")

COMMANDS = {
    "classify": ("classify", "Clase espectral y λ"),
    "eigen": ("eigen", "Autovalores, frecuencias, densidad"),
    "fixed-point": ("fixed_point", "Ventana del punto fijo de ρ_m²"),
    "table1": ("table1", "N mínimo con log λ > media de log-normas"),
    "figure1": ("figure1", "log λ frente a m(q_m)"),
    "mahler": ("mahler", "Medidas de Mahler, cotas y límites"),
    "lyapunov": ("lyapunov", "Exponentes de Lyapunov muestreados"),
    "paircorr": ("paircorr", "Correlaciones de pares y renormalización"),
    "report": ("report", "Veredicto espectral"),
}

EVENT_KEYS = (
    "m",
    "m_range",
    "n",
    "samples",
    "resolution",
    "radius",
    "seed",
    "tol",
    "fmt",
    "out",
    "u0",
    "u1",
    "max_distance",
    "interior",
    "letters",
    "limits",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("m_pos", nargs="?", type=int, metavar="M", help="parámetro m de la familia")
    common.add_argument("--m", type=int, dest="m")
    common.add_argument("--range", dest="m_range", metavar="A:B")
    common.add_argument("--n", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--resolution", type=int)
    common.add_argument("--radius", type=float)
    common.add_argument("--seed", type=int)
    common.add_argument("--tol", type=float)
    common.add_argument("--format", dest="fmt", choices=OUTPUT_FORMATS)
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--u0", type=complex)
    common.add_argument("--u1", type=complex)
    common.add_argument("--max-distance", dest="max_distance", type=float)
    common.add_argument("--interior", type=float)
    common.add_argument("--letters", type=int)
    common.add_argument("--limits", action="store_true", default=None)

    parser = argparse.ArgumentParser(prog="inflation-spectra", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def build_event(args: argparse.Namespace) -> dict:
    values = vars(args)
    event = {key: values.get(key) for key in EVENT_KEYS if values.get(key) is not None}
    if args.m_pos is not None:
        event.setdefault("m", args.m_pos)
    return event


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    module_name, _ = COMMANDS[args.command]
    handler = importlib.import_module(f"src.{module_name}.app").lambda_handler
    event = build_event(args)
    logger.debug("Evento construido", extra={"command": args.command, "event": {k: str(v) for k, v in event.items()}})
    response = handler(event, None)

    if response["body"]:
        sys.stdout.write(response["body"])
    if response["exit_code"] != 0:
        sys.stderr.write(f"{args.command}: {response['message']}\n")
    return response["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
