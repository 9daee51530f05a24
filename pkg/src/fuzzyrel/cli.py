# src/fuzzyrel/cli.py
import sys
import argparse
from importlib import import_module
from . import __version__

# command -> (module implementing main(argv=None), one-line help)
COMMANDS = {
    "eval":     ("fuzzyrel.evaluate", "Evaluate a set expression on fuzzy sets read from a JSON file"),
    "check":    ("fuzzyrel.check",    "Check an inclusion statement on the degree grid"),
    "theorems": ("fuzzyrel.theorems", "List, check or export the theorem catalog"),
    "hunt":     ("fuzzyrel.hunt",     "Search for counterexamples or equality points"),
}

EXAMPLES = """Examples:
  fuzzyrel eval --sets sets.json --expr "A [+] B"
  fuzzyrel check "0.5*(A[+]B) >= (A.*B)^0.5" --given "a*b <= 0.25"
  fuzzyrel theorems check T10 --m 3
  fuzzyrel theorems check-all --format json
  fuzzyrel hunt T2a --mode equality-necessity

Exit status: 0 holds, 1 input error, 2 usage error, 3 violation found.
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzyrel",
        description="Fuzzy-set operations and a checker for their inclusion relations",
        epilog=EXAMPLES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="cmd", metavar="{" + ",".join(COMMANDS) + "}")
    for cmd, (_, help_text) in COMMANDS.items():
        # -h/--help is left to the subcommand's own parser
        sub.add_parser(cmd, help=help_text, add_help=False)
    return parser


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args, rest = parser.parse_known_args(argv)

    if not args.cmd:
        parser.print_help()
        return 0

    modname = COMMANDS[args.cmd][0]
    try:
        mod = import_module(modname)
    except ImportError as e:
        parser.error(f"Could not import subcommand module '{modname}': {e}")

    # everything after the command name belongs to the subcommand parser
    return mod.main(argv=rest)


if __name__ == "__main__":
    raise SystemExit(main())
