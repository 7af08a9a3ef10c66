"""Command-line front ends: adapter-stanza, adapter-camel, adapter-hatmi.

All three share one implementation parameterized by backend id:

    adapter-stanza --corpus corpus.jsonl --out stanza.jsonl [--batch-size N]

Exit codes follow the docner convention: 0 success, 1 usage error, 2 corpus
parse error, 3 I/O or missing backend runtime.
"""

from __future__ import annotations

import argparse
import sys
from typing import NoReturn, Optional, Sequence

from .runner import CorpusError, run_backend

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser(backend_id: str) -> argparse.ArgumentParser:
    parser = _Parser(
        prog=f"adapter-{backend_id}",
        description=f"Tag a corpus with {backend_id} and write annotation lines.",
    )
    parser.add_argument("--corpus", required=True, metavar="FILE",
                        help="corpus file to tag")
    parser.add_argument("--out", required=True, metavar="FILE",
                        help="annotation file to write")
    parser.add_argument("--batch-size", type=int, default=None, metavar="N",
                        help="inference batch size (backend-dependent)")
    parser.add_argument("--model", default=None, metavar="NAME",
                        help="override the default model/checkpoint")
    return parser


def main(argv: Optional[Sequence[str]] = None, *, backend_id: str) -> int:
    args = build_parser(backend_id).parse_args(argv)
    if args.batch_size is not None and args.batch_size < 1:
        print(f"adapter-{backend_id}: error: --batch-size must be >= 1",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        count = run_backend(
            args.corpus,
            backend_id,
            args.out,
            model=args.model,
            batch_size=args.batch_size,
        )
    except CorpusError as exc:
        print(f"adapter-{backend_id}: {args.corpus}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ImportError as exc:
        print(
            f"adapter-{backend_id}: backend runtime not installed ({exc}); "
            f"try: pip install 'docner-adapters[{backend_id}]'",
            file=sys.stderr,
        )
        return EXIT_IO
    except OSError as exc:
        print(f"adapter-{backend_id}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"adapter-{backend_id}: wrote {count} annotations to {args.out}",
          file=sys.stderr)
    return EXIT_OK


def stanza_main() -> None:
    raise SystemExit(main(backend_id="stanza"))


def camel_main() -> None:
    raise SystemExit(main(backend_id="camel"))


def hatmi_main() -> None:
    raise SystemExit(main(backend_id="hatmi"))
