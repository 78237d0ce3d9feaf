"""Command-line entry point mirroring BridgeConfig."""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .config import BridgeConfig
from .encoders import EncoderError
from .export import InputError, export_scores


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordcoref-bridge",
        description="Export antecedent score matrices and boundary scores "
                    "from an encoder, in wordcoref wire formats")
    parser.add_argument("--version", action="version",
                        version=f"wordcoref-bridge {__version__}")
    parser.add_argument("--docs", required=True,
                        help="jsonlines documents to score")
    parser.add_argument("--scores", default="scores.jsonl",
                        help="output score-matrix file")
    parser.add_argument("--boundaries", default="boundaries.jsonl",
                        help="output boundary-score file")
    parser.add_argument("--model", default="hash:64",
                        help="hash:<dim> or a Hugging Face model id")
    parser.add_argument("--device", default="cpu")
    parser.add_argument("--top-k", type=int, default=50)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = BridgeConfig(model=ns.model, device=ns.device,
                              top_k=ns.top_k, scores_path=ns.scores,
                              boundaries_path=ns.boundaries)
        report = export_scores(ns.docs, config)
    except (EncoderError, ValueError) as exc:
        print(f"wordcoref-bridge: setup error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"wordcoref-bridge: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"wordcoref-bridge: i/o error: {exc}", file=sys.stderr)
        return 4
    print(f"{report.matrices}/{report.documents} documents scored with "
          f"{report.model}; {report.boundary_records} boundary records; "
          f"{len(report.errors)} errors")
    return 0 if not report.errors else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
