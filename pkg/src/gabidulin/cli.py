"""Command-line interface.

    gabidulin codegen --q 2 --m 3 --n 3 --k 2 --out code.json
    gabidulin encode  --code code.json --message '[[1,0,0],[0,1,0]]' --out c.json
    gabidulin corrupt --code code.json --in c.json --rank 1 --seed 7 --out r.json
    gabidulin decode  --code code.json --in r.json --format json
    gabidulin oracle  --code code.json --in r.json --format json
    gabidulin demo-example15
    gabidulin selftest

Exit codes: 0 success, 1 decoding failure (or ambiguity with --unique),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from . import serialize as io
from .code import GabidulinCode
from .errors import (
    AmbiguousDecodingError,
    CandidateBudgetError,
    DecodingInvariantError,
    GabidulinError,
    RadiusExhaustedError,
)
from .decoder import decode_unique, list_decode
from .field import FieldCtx
from .oracle import DEFAULT_BUDGET, oracle_closest

EXIT_OK, EXIT_DECODE, EXIT_INPUT = 0, 1, 2
DEFAULT_CANDIDATE_BUDGET = 2**24


class InputError(Exception):
    pass


def _load_json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {text!r} ({exc})") from None


def _load_code(path) -> GabidulinCode:
    if not path:
        raise InputError("--code is required")
    return io.code_from_dict(io.read_json(path))


def _load_word(code: GabidulinCode, path):
    if not path:
        raise InputError("--in is required")
    word = io.word_from_dict(code.ctx, io.read_json(path))
    if len(word) != code.n:
        raise InputError(f"word has {len(word)} elements, code length is {code.n}")
    return word


def _human_vector(v) -> str:
    return "(" + ", ".join(f"{x.power_str()} {x.digits}" for x in v) + ")"


def _emit_result(args, code, result, histogram=False):
    data = io.result_to_dict(code, result, histogram=histogram)
    if args.format == "json":
        io.write_json(data, args.out)
        return
    lines = [f"rank distance {result.distance}: {len(result.entries)} closest codeword(s)"]
    for e in sorted(result.entries, key=lambda e: code.message_key(e.message)):
        lines.append(f"  f = {e.message}")
        lines.append(f"    c = {_human_vector(e.codeword)}")
    if histogram:
        lines.append("distance histogram: " + ", ".join(f"{k}: {v}" for k, v in sorted(result.histogram.items())))
    text = "\n".join(lines) + "\n"
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_codegen(args) -> int:
    modulus = _load_json_arg(args.modulus) if args.modulus else None
    ctx = FieldCtx(args.q, args.m, modulus)
    g = None
    if args.g:
        g = tuple(io.vector_from_list(ctx, _load_json_arg(args.g)))
    code = GabidulinCode(ctx, args.n, args.k, g or ())
    io.write_json(io.code_to_dict(code), args.out)
    if args.out and args.out != "-":
        print(f"wrote [{code.n}, {code.k}] Gabidulin code over GF({ctx.q}^{ctx.m}), d = {code.d}", file=sys.stderr)
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    if args.message is None:
        raise InputError("--message is required (JSON list of coefficient digit lists)")
    coeffs = io.vector_from_list(code.ctx, _load_json_arg(args.message))
    io.write_json(io.word_to_dict(code.encode(coeffs)), args.out)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    code = _load_code(args.code)
    word = _load_word(code, args.inp)
    if args.rank is None:
        raise InputError("--rank is required")
    e = code.random_error(args.rank, args.seed)
    io.write_json(io.word_to_dict(code.add(word, e)), args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    word = _load_word(code, args.inp)
    budget = args.budget if args.budget is not None else DEFAULT_CANDIDATE_BUDGET
    if args.unique:
        try:
            decode_unique(code, word, budget=budget)
        except AmbiguousDecodingError as exc:
            print(f"error: {exc}", file=sys.stderr)
            _emit_result(args, code, exc.result)
            return EXIT_DECODE
    result = list_decode(code, word, budget=budget)
    _emit_result(args, code, result)
    return EXIT_OK


def cmd_oracle(args) -> int:
    code = _load_code(args.code)
    word = _load_word(code, args.inp)
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    result = oracle_closest(code, word, budget=budget)
    _emit_result(args, code, result, histogram=args.histogram)
    return EXIT_OK


def cmd_demo(args) -> int:
    from .demo import run_demo

    lines, ok = run_demo()
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_DECODE


def cmd_selftest(args) -> int:
    from .selftest import run

    return EXIT_OK if run(trials=args.trials, seed=args.seed or 0) else EXIT_DECODE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gabidulin", description="Gabidulin codes and rank-metric list decoding")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, code=True, inp=True, fmt=False):
        if code:
            p.add_argument("--code", help="code file (JSON)")
        if inp:
            p.add_argument("--in", dest="inp", help="word file (JSON)")
        p.add_argument("--out", help="output file (default: stdout)")
        if fmt:
            p.add_argument("--format", choices=["human", "json"], default="human")
            p.add_argument("--budget", type=int, default=None, help="maximum candidate checks per sweep level")

    p = sub.add_parser("codegen", help="write a code file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--modulus", help="JSON digit list, low to high, e.g. '[1,1,0,1]'")
    p.add_argument("--g", help="JSON list of element digit lists")
    common(p, code=False, inp=False)
    p.set_defaults(func=cmd_codegen)

    p = sub.add_parser("encode", help="encode a message")
    p.add_argument("--message", help="JSON list of coefficient digit lists, a_0 first")
    common(p, inp=False)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="add a random error of given rank")
    p.add_argument("--rank", type=int)
    p.add_argument("--seed", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", help="list-decode a received word")
    p.add_argument("--unique", action="store_true", help="fail unless the closest codeword is unique and within d/2")
    common(p, fmt=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("oracle", help="brute-force closest codewords")
    p.add_argument("--histogram", action="store_true", help="include the distance histogram")
    common(p, fmt=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("demo-example15", help="walk through the F_8 worked example")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("selftest", help="run the built-in property checks")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError, jsonschema.ValidationError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CandidateBudgetError, RadiusExhaustedError, DecodingInvariantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DECODE
    except GabidulinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
