"""
Command-line front end.  Every subcommand prints one JSON object per check
(newline-delimited) and exits 0 if all pass, 1 if any fails, 2 on bad input.

    hecketwist twist --family A --rank 2 --max-len 6
    hecketwist kawanaka --group sl --n 3 --p 2 --w "1 2 1"
    hecketwist kalman --n 2 --braid "1,1,1"
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .braid import BraidWord, all_words, braid_of_element, parse_letters
from .coxeter import A, B, I2, CoxeterSystem, CoxElement, cox_enumerate
from .errors import HeckeTwistError
from .finfield.checks import (
    bruhat_constancy_check, closed_form_check, cor_check, equivariance_check, hecke_count_check,
    kawanaka_check, phi_image_check, prop44_check, vx_bijection_check,
)
from .finfield.closed_forms import CASES
from .finfield.groups import GroupSpec, weyl_lift
from .finfield.varieties import count_U_beta, count_Ug, count_Vg, count_X_beta, count_Xg
from .hecke import twist_check
from .homfly import kalman_check

SUBCOMMANDS = (
    "twist", "kalman", "kawanaka", "count", "cor", "hecke-count", "prop44", "phi-check",
    "constancy", "vx",
)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    family: str | None = None
    rank: int | None = None
    m: int | None = None
    group: str | None = None
    n: int | None = None
    p: int | None = None
    braid: str | None = None
    w: str | None = None
    max_len: int | None = None
    samples: int | None = None
    seed: int = 0
    out: str | None = None
    sign: str = "both"
    case: str | None = None
    shift_w0: bool = False

    def coxeter(self) -> CoxeterSystem:
        if self.group:
            return self.group_spec().weyl
        fam = (self.family or "A").upper()
        if fam == "I2":
            if self.m is None:
                raise ConfigError("--family I2 needs --m")
            return I2(self.m)
        rank = self.rank
        if rank is None and self.n is not None:
            rank = self.n - 1  # --n counts strands
        if rank is None:
            raise ConfigError(f"--family {fam} needs --rank (or --n strands)")
        if fam == "A":
            return A(rank)
        if fam == "B":
            return B(rank)
        raise ConfigError(f"unknown Coxeter family {self.family!r}")

    def group_spec(self) -> GroupSpec:
        if not self.group:
            raise ConfigError(f"{self.subcommand} needs --group")
        if self.p is None:
            raise ConfigError(f"{self.subcommand} needs --p")
        n = 4 if self.group.lower() == "sp4" else self.n
        if n is None:
            raise ConfigError("--group gl/sl needs --n")
        return GroupSpec(self.group, n, self.p)

    def braids(self, system: CoxeterSystem) -> list[BraidWord]:
        """--braid, --w (as sigma_w), random words (--samples), or every word up to --max-len."""
        if self.braid is not None:
            return [BraidWord(system, parse_letters(self.braid))]
        if self.w is not None:
            return [braid_of_element(self.weyl_element(system))]
        if self.max_len is None:
            raise ConfigError(f"{self.subcommand} needs --braid, --w or --max-len")
        if self.samples is not None:
            rng = random.Random(self.seed)
            gens = list(system.generators)
            return [
                BraidWord(system, tuple(rng.choice(gens) for _ in range(rng.randint(0, self.max_len))))
                for _ in range(self.samples)
            ]
        return list(all_words(system, self.max_len))

    def weyl_element(self, system: CoxeterSystem) -> CoxElement:
        return system.word(parse_letters(self.w))

    def weyl_elements(self, system: CoxeterSystem) -> list[CoxElement]:
        if self.w is not None:
            return [self.weyl_element(system)]
        return cox_enumerate(system)


def _count_report(cfg: RunConfig) -> list[dict]:
    spec = cfg.group_spec()
    out = []
    if cfg.braid is not None or cfg.max_len is not None:
        for beta in cfg.braids(spec.weyl):
            out.append({
                "check": "count", "params": {**spec.to_json(), "beta": list(beta.letters)},
                "U_beta": count_U_beta(beta, spec), "X_beta": count_X_beta(beta, spec), "pass": True,
            })
        return out
    for w in cfg.weyl_elements(spec.weyl):
        g = weyl_lift(w, spec)
        counts = {"U_g": count_Ug(g, spec), "V_g": count_Vg(g, spec)}
        if spec.family != "SP4" and spec.n <= 3:
            counts["X_g"] = count_Xg(g, spec)
        out.append({"check": "count", "params": {**spec.to_json(), "w": list(w.reduced_word())},
                    **counts, "pass": True})
    return out


def run(cfg: RunConfig) -> list[dict]:
    """Run the checks a config asks for and return their JSON reports in order."""
    sub = cfg.subcommand
    if sub == "twist":
        return [twist_check(b).to_json() for b in cfg.braids(cfg.coxeter())]
    if sub == "kalman":
        return [kalman_check(b).to_json() for b in cfg.braids(cfg.coxeter())]
    if sub == "count":
        return _count_report(cfg)
    if sub == "phi-check":
        if cfg.p is None:
            raise ConfigError("phi-check needs --p")
        cases = [cfg.case] if cfg.case else list(CASES)
        samples = 1000 if cfg.samples is None else cfg.samples
        return [closed_form_check(c, cfg.p, samples, cfg.seed).to_json() for c in cases]

    spec = cfg.group_spec()
    if sub in ("cor", "hecke-count"):
        reports = []
        for beta in cfg.braids(spec.weyl):
            if sub == "cor":
                reports.append(cor_check(beta, spec))
                continue
            signs = ("-", "+") if cfg.sign == "both" else (cfg.sign,)
            reports.extend(hecke_count_check(beta, spec, s, cfg.shift_w0) for s in signs)
        return [r.to_json() for r in reports]

    ws = cfg.weyl_elements(spec.weyl)
    if sub == "kawanaka":
        return [kawanaka_check(spec, w).to_json() for w in ws]
    if sub == "prop44":
        return [prop44_check(w, spec, v).to_json() for w in ws for v in ("U", "X")]
    if sub == "constancy":
        samples = 5 if cfg.samples is None else cfg.samples
        return [bruhat_constancy_check(w, spec, samples, cfg.seed).to_json() for w in ws]
    if sub == "vx":
        out = []
        for w in ws:
            out += [vx_bijection_check(w, spec).to_json(), phi_image_check(w, spec).to_json(),
                    equivariance_check(w, spec).to_json()]
        return out
    raise ConfigError(f"unknown subcommand {sub!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hecketwist", description=__doc__.strip().splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        sp = subs.add_parser(name)
        sp.add_argument("--family", choices=["A", "B", "I2"], type=str.upper)
        sp.add_argument("--rank", type=int)
        sp.add_argument("--m", type=int, help="dihedral order for I2")
        sp.add_argument("--group", choices=["gl", "sl", "sp4"], type=str.lower)
        sp.add_argument("--n", type=int, help="matrix size, or strand count for kalman")
        sp.add_argument("--p", type=int)
        sp.add_argument("--braid", help='positive word, e.g. "1,2 1"')
        sp.add_argument("--w", help="word for a Weyl group element")
        sp.add_argument("--max-len", type=int)
        sp.add_argument("--samples", type=int)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="write NDJSON here instead of stdout")
        if name == "hecke-count":
            sp.add_argument("--sign", choices=["+", "-", "both"], default="both")
            sp.add_argument("--shift-w0", action="store_true",
                            help="multiply the prediction by q^-l(w0)")
        if name == "phi-check":
            sp.add_argument("--case", choices=sorted(CASES))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        reports = run(cfg)
    except (HeckeTwistError, ValueError) as exc:
        print(f"hecketwist: {exc}", file=sys.stderr)
        return 2
    text = "".join(json.dumps(r) + "\n" for r in reports)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r["pass"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
