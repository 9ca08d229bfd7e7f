"""Command-line interface: ``pixshuffle {encrypt,decrypt,key,analyze}``.

Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 invariant
violation found by a paired ``analyze``.
"""

import argparse
import sys

from .analysis import DEFAULT_SERIES_LENGTH, build_report, format_report
from .cipher import CHANNEL_MODES, CipherConfig, decrypt_with_key, encrypt
from .io import ImageFormatError, export_report, load_image, save_image
from .keying import derive_key

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser():
    parser = _Parser(prog="pixshuffle", description="Image-keyed pixel-shuffling cipher.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("encrypt", "decrypt"):
        p = sub.add_parser(name, help=f"{name} a PPM/PNG image")
        p.add_argument("input")
        p.add_argument("output")
        p.add_argument("--mode", choices=CHANNEL_MODES, default="rotate")
        p.add_argument("--key", type=_positive_int, default=None,
                       help="override the image-derived iteration count")

    p = sub.add_parser("key", help="print the key material derived from an image")
    p.add_argument("input")

    p = sub.add_parser("analyze", help="measure an image, optionally against its cipher")
    p.add_argument("input")
    p.add_argument("--against", default=None)
    p.add_argument("--n", type=_positive_int, default=DEFAULT_SERIES_LENGTH)
    p.add_argument("--format", choices=("text", "structured", "csv"), default="text")
    p.add_argument("--out", default=None)
    return parser


def _run(args):
    if args.command == "key":
        print(derive_key(load_image(args.input)))
        return 0

    if args.command in ("encrypt", "decrypt"):
        cfg = CipherConfig(channel_mode=args.mode, key_override=args.key)
        img = load_image(args.input)
        if args.command == "encrypt":
            out, key = encrypt(img, cfg)
        else:
            out, key = decrypt_with_key(img, cfg)
        save_image(out, args.output)
        print(key)
        return 0

    plain = load_image(args.input)
    other = load_image(args.against) if args.against else None
    report = build_report(plain, other, n=args.n)
    if args.format == "text":
        payload = format_report(report).encode()
    else:
        payload = export_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode())
    if not report.passed:
        failed = [k for k, ok in report.verdicts.items() if not ok]
        print(f"invariant violation: {', '.join(failed)}", file=sys.stderr)
        return EXIT_INVARIANT
    return 0


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args)
    except (OSError, ImageFormatError, ValueError) as exc:
        print(f"pixshuffle: {exc}", file=sys.stderr)
        return EXIT_IO


def main():
    sys.exit(run())
