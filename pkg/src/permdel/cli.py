"""Command-line front end.

Subcommands::

    encode    --n N --t T (--digits a1,a2,... | --message M)
    decode    --n N --t T --received s0,s1,...
    rep       --perm s0,s1,...
    tables    --n N [--format tsv|json]
    selftest  [--max-n K]
    bench     --n N [--iters K]

Exit status: 0 on success, 1 on invalid input, 2 when a full-length word is
not a codeword, 3 when the selftest finds a failure.  Results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from itertools import permutations as iter_permutations

from .codec import (
    CodeParams,
    DigitMessage,
    decode,
    digits_from_message,
    encode,
)
from .errors import NotACodewordError, PermdelError
from .oracle import check_parity_lemmas, check_perfect, vt_signature_check
from .perms import Permutation, delete_at, inverse, parse_permutation, permutation_text
from .represent import (
    RepVector,
    parity,
    parse_rep_vector,
    rep_fast,
    rep_inverse_fast,
    rep_vector_text,
)

__all__ = ["run", "main", "build_parser"]

_TABLE_BOUND = 8
_SELFTEST_BOUND = 8


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit with status 1, not 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def build_parser() -> _Parser:
    parser = _Parser(prog="permdel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="encode data digits into a codeword")
    enc.add_argument("--n", type=int, required=True, help="code length")
    enc.add_argument("--t", type=int, required=True, help="parity class")
    group = enc.add_mutually_exclusive_group(required=True)
    group.add_argument("--digits", help="data digits a1,a2,... (comma separated)")
    group.add_argument("--message", help="message integer in 0..(n-1)!-1")

    dec = sub.add_parser("decode", help="decode a received word (length n or n-1)")
    dec.add_argument("--n", type=int, required=True, help="code length")
    dec.add_argument("--t", type=int, required=True, help="parity class")
    dec.add_argument("--received", required=True, help="received symbols s0,s1,...")

    rep = sub.add_parser("rep", help="digit vector and parity of a permutation")
    rep.add_argument("--perm", required=True, help="permutation p0,p1,...")

    tab = sub.add_parser("tables", help="dump the representation table and codebooks")
    tab.add_argument("--n", type=int, required=True, help="length (at most 8)")
    tab.add_argument("--format", choices=("tsv", "json"), default="tsv")

    st = sub.add_parser("selftest", help="run the exhaustive certification suite")
    st.add_argument("--max-n", type=int, default=6, help="largest length to certify")

    bench = sub.add_parser("bench", help="time the quasi-linear paths")
    bench.add_argument("--n", type=int, required=True, help="problem size (>= 16)")
    bench.add_argument("--iters", type=int, default=3, help="repetitions per op")

    return parser


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    parts = [part.strip() for part in text.split(",") if part.strip() != ""]
    try:
        return tuple(int(part) for part in parts)
    except ValueError:
        raise PermdelError(f"{flag} must be a comma-separated list of integers")


def _cmd_encode(args: argparse.Namespace) -> int:
    params = CodeParams(args.n, args.t)
    if args.digits is not None:
        msg = DigitMessage(args.n, _parse_int_list(args.digits, "--digits"))
    else:
        try:
            value = int(args.message)
        except ValueError:
            raise PermdelError("--message must be a decimal integer")
        msg = digits_from_message(args.n, value)
    print(permutation_text(encode(params, msg)))
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    params = CodeParams(args.n, args.t)
    word = _parse_int_list(args.received, "--received")
    result = decode(params, word)
    print(f"codeword: {permutation_text(result.codeword)}")
    print("digits: " + ",".join(str(d) for d in result.digits.digits))
    print(f"message: {result.digits.value}")
    print(f"insertion_index: {result.insertion_index}")
    return 0


def _cmd_rep(args: argparse.Namespace) -> int:
    p = parse_permutation(args.perm)
    alpha = rep_fast(p)
    print(rep_vector_text(alpha))
    print(f"parity: {parity(alpha)}")
    return 0


def _tables_data(n: int) -> tuple[list[tuple[Permutation, RepVector]], dict[int, list[tuple[Permutation, RepVector]]]]:
    representation = []
    codebooks: dict[int, list[tuple[Permutation, RepVector]]] = {t: [] for t in range(n)}
    for vals in iter_permutations(range(n)):
        p = Permutation(vals)
        representation.append((p, rep_fast(p)))
        alpha_inv = rep_fast(inverse(p))
        codebooks[parity(alpha_inv) % n].append((p, alpha_inv))
    return representation, codebooks


def _cmd_tables(args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= _TABLE_BOUND:
        raise PermdelError(f"--n must be between 1 and {_TABLE_BOUND} for tables")
    representation, codebooks = _tables_data(n)
    if args.format == "json":
        payload = {
            "n": n,
            "representation": [
                {"perm": list(p.values), "rep": list(alpha.components)}
                for p, alpha in representation
            ],
            "codebooks": [
                {
                    "t": t,
                    "codewords": [
                        {"codeword": list(p.values), "rep_of_inverse": list(alpha.components)}
                        for p, alpha in codebooks[t]
                    ],
                }
                for t in range(n)
            ],
        }
        print(json.dumps(payload))
        return 0
    print(f"# representation\tn={n}")
    print("perm\trep")
    for p, alpha in representation:
        print(f"{permutation_text(p)}\t{rep_vector_text(alpha)}")
    print()
    print(f"# codebooks\tn={n}")
    print("t\tcodeword\trep_of_inverse")
    for t in range(n):
        for p, alpha in codebooks[t]:
            print(f"{t}\t{permutation_text(p)}\t{rep_vector_text(alpha)}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    max_n = args.max_n
    if not 2 <= max_n <= _SELFTEST_BOUND:
        raise PermdelError(f"--max-n must be between 2 and {_SELFTEST_BOUND}")
    failed = False

    for n in range(2, max_n + 1):
        report = check_perfect(n, bound=max_n)
        status = "PASS" if report.ok else "FAIL"
        failed = failed or not report.ok
        sizes = ",".join(str(s) for s in report.code_sizes)
        print(f"{status} perfectness n={n} sizes={sizes}")
        if not report.ok:
            for line in report.text_lines():
                print(f"  {line}")

        bad_vt = sum(
            not vt_signature_check(Permutation(vals))
            for vals in iter_permutations(range(n))
        )
        status = "PASS" if bad_vt == 0 else "FAIL"
        failed = failed or bad_vt > 0
        print(f"{status} vt_signature n={n} violations={bad_vt}")

        bad_lemmas = sum(
            not check_parity_lemmas(Permutation(vals))
            for vals in iter_permutations(range(n))
        )
        status = "PASS" if bad_lemmas == 0 else "FAIL"
        failed = failed or bad_lemmas > 0
        print(f"{status} parity_lemmas n={n} violations={bad_lemmas}")

    print("selftest: " + ("FAIL" if failed else "PASS"))
    return 3 if failed else 0


def _random_inputs(rng: random.Random, size: int):
    vals = list(range(size))
    rng.shuffle(vals)
    perm = Permutation(tuple(vals))
    digits = tuple(rng.randint(1, j + 1) for j in range(1, size - 1))
    alpha = RepVector((1,) + digits + (rng.randint(1, size),))
    params = CodeParams(size, rng.randrange(size))
    msg = DigitMessage(size, digits)
    codeword = encode(params, msg)
    received = delete_at(codeword, rng.randrange(size)).symbols
    return perm, alpha, params, msg, received


def _cmd_bench(args: argparse.Namespace) -> int:
    n = args.n
    if n < 16:
        raise PermdelError("--n must be at least 16 for bench")
    if args.iters < 1:
        raise PermdelError("--iters must be positive")
    rng = random.Random(0xC0DE)
    timings: dict[str, dict[int, float]] = {}
    for size in (n // 2, n):
        perm, alpha, params, msg, received = _random_inputs(rng, size)
        ops = {
            "rep_fast": lambda: rep_fast(perm),
            "rep_inverse_fast": lambda: rep_inverse_fast(alpha),
            "encode": lambda: encode(params, msg),
            "decode": lambda: decode(params, received),
        }
        for name, op in ops.items():
            start = time.perf_counter()
            for _ in range(args.iters):
                op()
            elapsed = (time.perf_counter() - start) / args.iters
            timings.setdefault(name, {})[size] = elapsed
    for name, by_size in timings.items():
        per_op = by_size[n]
        ratio = per_op / by_size[n // 2] if by_size[n // 2] > 0 else float("inf")
        print(
            f"{name}\tn={n}\t{per_op:.4e} s/op\t"
            f"{per_op / n * 1e9:.1f} ns/elem\tdoubling_ratio={ratio:.2f}"
        )
    return 0


_COMMANDS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "rep": _cmd_rep,
    "tables": _cmd_tables,
    "selftest": _cmd_selftest,
    "bench": _cmd_bench,
}


def run(argv: list[str]) -> int:
    """Parse argv, dispatch, and return the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 1
    try:
        return _COMMANDS[args.command](args)
    except NotACodewordError as exc:
        sys.stderr.write(f"permdel: {exc}\n")
        return 2
    except PermdelError as exc:
        sys.stderr.write(f"permdel: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
