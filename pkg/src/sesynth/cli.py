"""Command-line front end.

Subcommands: encode, decode, interpolate, check-se, synthesize,
run-corpus.  Results go to stdout, human-readable reports to stderr.
Exit codes: 0 success / positive verdict, 1 negative verdict (not SE,
not an encoding, no program exists), 2 unknown, 64 usage error, 65
parse error, 66 ground size guard.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .decode import NotAnEncoding, decode
from .encoding import encode_program, encodes_program_check, s_formula_for
from .fol import TRUE, And, conj, formula_functions, implies
from .interpolation import (InterpolationTask, craig_lyndon_interpolant_iter,
                            lp_interpolant_iter)
from .lp import ParseError, Program, parse_program, print_program, program_functions
from .prover import (SearchLimits, SizeGuardError, dump_proof, ground_decider,
                     prover_decider, set_proof_hook)
from .synthesis import (PlainVocab, PositionalVocab, VocabularyError,
                        plain_vocab_from_hidden, se_oracle_ground,
                        strongly_equivalent, synthesize)
from .tptp import fof_lines, formula_text, parse_tptp_formula

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_PARSE = 65
EXIT_SIZE = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _info(*args):
    print(*args, file=sys.stderr)


def _add_limit_flags(sp):
    sp.add_argument("--depth", type=int, help="tableau depth bound")
    sp.add_argument("--inferences", type=int, help="inference budget")
    sp.add_argument("--timeout", type=float, help="wall-clock budget in seconds")
    sp.add_argument("--ground-atoms", type=int, dest="ground_atoms",
                    help="ground atom bound for the exact oracle")
    sp.add_argument("--config", help="key=value file with default limits")


def _read_config(path: str) -> dict:
    out = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"bad config line: {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _settings(args) -> tuple:
    """SearchLimits and ground-atom bound from flags and config file."""
    conf = _read_config(args.config) if getattr(args, "config", None) else {}

    def pick(flag, key, cast, fallback):
        if flag is not None:
            return flag
        if key in conf:
            return cast(conf[key])
        return fallback

    defaults = SearchLimits()
    limits = SearchLimits(
        max_depth=pick(args.depth, "depth", int, defaults.max_depth),
        max_inferences=pick(args.inferences, "inferences", int,
                            defaults.max_inferences),
        wall_time=pick(args.timeout, "timeout", float, defaults.wall_time))
    atoms = pick(args.ground_atoms, "ground_atoms", int, 24)
    return limits, atoms


def _load_program(path: str) -> Program:
    return parse_program(Path(path).read_text())


def build_parser() -> _Parser:
    ap = _Parser(prog="sesynth", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("encode", help="emit the first-order encoding of a program")
    sp.add_argument("program")

    sp = sub.add_parser("decode", help="extract a program from a formula file")
    sp.add_argument("formula")
    sp.add_argument("--trivial-partition", action="store_true",
                    help="keep all superscript-1 clauses as rules")
    _add_limit_flags(sp)

    sp = sub.add_parser("interpolate", help="interpolant between two formula files")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--lp", action="store_true",
                    help="wrap the sides with persistence axioms and emit an "
                         "interpolant that encodes a program")
    sp.add_argument("--enumerate", type=int, default=1, dest="count",
                    help="emit up to N distinct interpolants")
    sp.add_argument("--dump-proof", dest="dump_proof",
                    help="write the closed tableau to a file")
    _add_limit_flags(sp)

    sp = sub.add_parser("check-se", help="strong equivalence of two programs")
    sp.add_argument("p")
    sp.add_argument("q")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--ground", action="store_const", const="ground",
                      dest="mode", help="force the exact ground oracle")
    mode.add_argument("--prover", action="store_const", const="prover",
                      dest="mode", help="force the first-order prover")
    sp.set_defaults(mode="auto")
    _add_limit_flags(sp)

    sp = sub.add_parser("synthesize",
                        help="synthesize a strongly equivalent program over a vocabulary")
    sp.add_argument("--context", required=True, help="context program P")
    sp.add_argument("--target", required=True, help="target program Q")
    vgroup = sp.add_mutually_exclusive_group(required=True)
    vgroup.add_argument("--vocab", help="comma-separated allowed predicates")
    vgroup.add_argument("--hide", help="comma-separated disallowed predicates")
    vgroup.add_argument("--vocab-pos", dest="vocab_pos",
                        help="plus=...;plus1=...;minus=... position table")
    sp.add_argument("--enumerate", type=int, default=1, dest="count",
                    help="emit up to N alternative programs")
    sp.add_argument("--trivial-partition", action="store_true")
    _add_limit_flags(sp)

    sp = sub.add_parser("run-corpus", help="run a directory of example cases")
    sp.add_argument("directory")
    _add_limit_flags(sp)

    return ap


# ---------------------------------------------------------------------------
# Command handlers

def _conjuncts(f):
    if f == TRUE:
        return ()
    return f.parts if isinstance(f, And) else (f,)


def _cmd_encode(args) -> int:
    enc = encode_program(_load_program(args.program))
    units = [(f"s_{i + 1}", "axiom", part)
             for i, part in enumerate(_conjuncts(enc.s))]
    units += [(f"gamma_{i + 1}", "axiom", part)
              for i, part in enumerate(_conjuncts(enc.gamma))]
    if units:
        sys.stdout.write(fof_lines(units))
    return EXIT_OK


def _cmd_decode(args) -> int:
    limits, atoms = _settings(args)
    f = parse_tptp_formula(Path(args.formula).read_text())
    free = all(a == 0 for _, a in formula_functions(f))
    decider = ground_decider(atoms) if free else prover_decider(limits)
    verdict = encodes_program_check(f, decider)
    if verdict is False:
        _info("input does not encode a logic program")
        return EXIT_NEGATIVE
    if verdict is None:
        _info("warning: could not confirm that the input encodes a program")
    partition = "trivial" if args.trivial_partition else "subsumption"
    program = decode(f, partition=partition)
    sys.stdout.write(print_program(program))
    return EXIT_OK


def _cmd_interpolate(args) -> int:
    limits, _ = _settings(args)
    left = parse_tptp_formula(Path(args.left).read_text())
    right = parse_tptp_formula(Path(args.right).read_text())
    if args.lp:
        left_full = conj([s_formula_for(left), left])
        right_full = implies(s_formula_for(right), right)
        source = lp_interpolant_iter(left_full, right_full,
                                     formula_functions(left), limits)
    else:
        task = InterpolationTask.make(left, right)
        source = craig_lyndon_interpolant_iter(task, limits)
    proofs: list = []
    if args.dump_proof:
        set_proof_hook(proofs.append)
    try:
        emitted = 0
        for h in source:
            print(formula_text(h))
            emitted += 1
            if emitted >= args.count:
                break
    finally:
        set_proof_hook(None)
    if args.dump_proof and proofs:
        Path(args.dump_proof).write_text(dump_proof(proofs[0]))
    if emitted == 0:
        _info("no proof found within the limits")
        return EXIT_UNKNOWN
    return EXIT_OK


def _cmd_check_se(args) -> int:
    limits, atoms = _settings(args)
    p = _load_program(args.p)
    q = _load_program(args.q)
    if args.mode in ("ground", "auto") and all(
            a == 0 for _, a in program_functions(p) | program_functions(q)):
        res = se_oracle_ground(p, q, max_atoms=atoms)
        if res.holds:
            print("strongly equivalent")
            return EXIT_OK
        print("not strongly equivalent")
        _info("countermodel:")
        for atom, value in res.countermodel.items():
            _info(f"  {atom} = {'true' if value else 'false'}")
        return EXIT_NEGATIVE
    if args.mode == "ground":
        raise UsageError("--ground needs function-free programs")
    verdict = strongly_equivalent(p, q, limits, mode="prover")
    if verdict is True:
        print("strongly equivalent")
        return EXIT_OK
    print("unknown")
    _info("prover exhausted its limits without both proofs")
    return EXIT_UNKNOWN


def _parse_positional(text: str) -> PositionalVocab:
    parts = {"plus": set(), "plus1": set(), "minus": set()}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise UsageError(f"bad --vocab-pos segment {chunk!r}")
        key, value = chunk.split("=", 1)
        key = key.strip()
        if key not in parts:
            raise UsageError(f"unknown --vocab-pos key {key!r}")
        parts[key] = {n.strip() for n in value.split(",") if n.strip()}
    return PositionalVocab.of(parts["plus"], parts["plus1"], parts["minus"])


def _cmd_synthesize(args) -> int:
    limits, atoms = _settings(args)
    p = _load_program(args.context)
    q = _load_program(args.target)
    if args.vocab is not None:
        vocab = PlainVocab.of(n.strip() for n in args.vocab.split(",") if n.strip())
    elif args.hide is not None:
        vocab = plain_vocab_from_hidden(
            p, q, {n.strip() for n in args.hide.split(",") if n.strip()})
    else:
        vocab = _parse_positional(args.vocab_pos)
    partition = "trivial" if args.trivial_partition else "subsumption"
    report = synthesize(p, q, vocab, limits, count=args.count,
                        partition=partition, max_atoms=atoms)
    for note in report.notes:
        _info(f"note: {note}")
    if report.status == "found":
        sys.stdout.write(print_program(report.program))
        for alt in report.alternatives:
            sys.stdout.write("\n" + print_program(alt))
        _info(f"interpolant: {formula_text(report.interpolant)}")
        _info(f"verification: {report.verification}")
        _info(f"entailment left:  {formula_text(report.left)}")
        _info(f"entailment right: {formula_text(report.right)}")
        return EXIT_OK
    if report.status == "not-found":
        _info("no such program exists; countermodel:")
        for atom, value in report.countermodel.items():
            _info(f"  {atom} = {'true' if value else 'false'}")
        return EXIT_NEGATIVE
    _info("no program found within the limits")
    return EXIT_UNKNOWN


def _cmd_run_corpus(args) -> int:
    limits, atoms = _settings(args)
    summary = run_corpus(Path(args.directory), limits, atoms)
    for name, ok, detail in summary:
        print(f"{name}: {'PASS' if ok else 'FAIL'}{'' if not detail else ' (' + detail + ')'}")
    failed = [name for name, ok, _ in summary if not ok]
    print(f"{len(summary) - len(failed)}/{len(summary)} cases passed")
    return EXIT_OK if not failed else EXIT_NEGATIVE


def run_corpus(directory: Path, limits=None, max_atoms: int = 24) -> list:
    """Run every case directory; returns (name, passed, detail) triples.

    A case holds Q.lp, expect.cfg, usually P.lp and vocab.cfg, and
    optionally R.lp as a reference result to compare against.
    """
    limits = limits or SearchLimits()
    results = []
    for case in sorted(d for d in directory.iterdir() if d.is_dir()):
        expect_file = case / "expect.cfg"
        if not expect_file.exists():
            continue
        try:
            results.append(_run_case(case, limits, max_atoms))
        except Exception as e:  # a broken case should not stop the run
            results.append((case.name, False, f"{type(e).__name__}: {e}"))
    return results


def _read_cfg(path: Path) -> dict:
    out = {}
    if not path.exists():
        return out
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _split_names(text: str) -> set:
    return {n.strip() for n in text.split(",") if n.strip()}


def _run_case(case: Path, limits, max_atoms) -> tuple:
    expect = _read_cfg(case / "expect.cfg")
    vocab_cfg = _read_cfg(case / "vocab.cfg")
    p_file = case / "P.lp"
    p = parse_program(p_file.read_text()) if p_file.exists() else Program()
    q = parse_program((case / "Q.lp").read_text())
    if "vocab" in vocab_cfg:
        vocab = PlainVocab.of(_split_names(vocab_cfg["vocab"]))
    elif "hide" in vocab_cfg:
        vocab = plain_vocab_from_hidden(p, q, _split_names(vocab_cfg["hide"]))
    else:
        vocab = PositionalVocab.of(_split_names(vocab_cfg.get("plus", "")),
                                   _split_names(vocab_cfg.get("plus1", "")),
                                   _split_names(vocab_cfg.get("minus", "")))
    report = synthesize(p, q, vocab, limits, max_atoms=max_atoms)
    wanted = expect.get("result", "found")
    if report.status != wanted:
        return (case.name, False, f"status {report.status}, wanted {wanted}")
    if wanted == "found":
        ref_file = case / "R.lp"
        if ref_file.exists():
            ref = parse_program(ref_file.read_text())
            res = se_oracle_ground(p.union(report.program), p.union(ref),
                                   max_atoms=max_atoms)
            if not res.holds:
                return (case.name, False,
                        "result not strongly equivalent to the reference")
    return (case.name, True, "")


# ---------------------------------------------------------------------------

_HANDLERS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "interpolate": _cmd_interpolate,
    "check-se": _cmd_check_se,
    "synthesize": _cmd_synthesize,
    "run-corpus": _cmd_run_corpus,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as e:
        _info(f"usage error: {e}")
        return EXIT_USAGE
    except VocabularyError as e:
        _info(f"usage error: {e}")
        return EXIT_USAGE
    except ParseError as e:
        _info(f"parse error: {e}")
        return EXIT_PARSE
    except NotAnEncoding as e:
        _info(f"not an encoding: {e}")
        return EXIT_NEGATIVE
    except SizeGuardError as e:
        _info(f"size guard: {e}")
        return EXIT_SIZE
    except FileNotFoundError as e:
        _info(f"usage error: {e}")
        return EXIT_USAGE


def script_main():
    sys.exit(main())


if __name__ == "__main__":
    script_main()
