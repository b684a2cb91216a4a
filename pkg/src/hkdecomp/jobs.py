"""Job specifications, execution, and report rendering.

Both the CLI and the HTTP service funnel through ``run_job``. A job is a
self-contained description: ring, ideal, command, and parameters. The
report payload is a plain dict with a fixed key vocabulary
(ring/command/params/result/certificate) so that independently produced
reports interoperate; rendering it is byte-stable for identical inputs.
Wall-clock timing lives next to the payload, never inside it.
"""

import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .decompose import (Certificate, SelectionPolicy, SignedCombination,
                        decompose_general, default_q_list, verify_identity)
from .errors import InputError, ToolkitError
from .groebner import Ideal, pair_budget
from .hk import default_n_max, ghk_series, hk_series, lc_probe, multiplicity_estimate
from .ideals import krull_dimension
from .poly import Ring, format_polynomial, make_ring, parse_polynomial
from .selfcheck import run_selfchecks

COMMANDS = ("hk", "ghk", "lcprobe", "decompose", "verify", "selfcheck")


@dataclass
class JobSpec:
    command: str
    p: int = 2
    variables: tuple[str, ...] = ()
    quotient: tuple[str, ...] = ()
    ideal: tuple[str, ...] = ()
    n_max: int | None = None
    q_list: tuple[int, ...] | None = None
    seed: int = 0
    degree: int = 1
    retries: int = 8
    budget: int | None = None
    combination: dict | None = None  # parsed combination payload, verify only

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")


@dataclass
class ReportDocument:
    spec: JobSpec
    result: dict
    certificate: dict | None = None
    version: str = __version__
    timing_ms: float = 0.0
    ring_echo: dict = field(default_factory=dict)
    ideal_echo: list = field(default_factory=list)

    def payload(self) -> dict:
        doc = {
            "version": self.version,
            "command": self.spec.command,
            "ring": self.ring_echo,
            "ideal": self.ideal_echo,
            "params": {
                "n_max": self.spec.n_max,
                "q_list": list(self.spec.q_list) if self.spec.q_list else None,
                "seed": self.spec.seed,
                "degree": self.spec.degree,
                "retries": self.spec.retries,
            },
            "result": self.result,
        }
        if self.certificate is not None:
            doc["certificate"] = self.certificate
        return doc


def parse_input_document(text: str) -> tuple[dict, list[str]]:
    """Parse the two-line ring/ideal document.

    ring p=<prime> vars=<comma list> [quotient=<poly;poly;...>]
    ideal <poly>, <poly>, ...

    Lines starting with '#' are comments. Field values must not contain
    spaces; generator polynomials after 'ideal' may.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("ring"):
        raise InputError("input must start with a 'ring p=... vars=...' line")
    header = lines[0][len("ring"):].strip()
    fields = {}
    for chunk in header.split():
        if "=" not in chunk:
            raise InputError(f"malformed ring field {chunk!r} (expected key=value)")
        key, value = chunk.split("=", 1)
        fields[key] = value
    if "p" not in fields or "vars" not in fields:
        raise InputError("ring line needs p=<prime> and vars=<comma list>")
    try:
        p = int(fields["p"])
    except ValueError as exc:
        raise InputError(f"characteristic {fields['p']!r} is not an integer") from exc
    variables = [v for v in fields["vars"].split(",") if v]
    quotient = [g for g in fields.get("quotient", "").split(";") if g]
    ring_spec = {"p": p, "vars": variables, "quotient": quotient}
    if len(lines) < 2:
        return ring_spec, []
    if not lines[1].startswith("ideal"):
        raise InputError("second line must be 'ideal <poly>, <poly>, ...'")
    body = lines[1][len("ideal"):].strip()
    gens = [g.strip() for g in body.split(",") if g.strip()] if body else []
    return ring_spec, gens


def build_ring(ring_spec: dict) -> Ring:
    try:
        return make_ring(ring_spec["p"], ring_spec["vars"], ring_spec.get("quotient", ()))
    except (ValueError, ToolkitError) as exc:
        raise InputError(f"bad ring description: {exc}") from exc


def build_ideal(ring: Ring, gen_texts) -> Ideal:
    return Ideal(ring, [parse_polynomial(g, ring) for g in gen_texts])


def combination_from_payload(ring: Ring, data: dict) -> SignedCombination:
    """Rebuild a combination from report JSON (full report or bare terms)."""
    if "result" in data and isinstance(data["result"], dict):
        data = data["result"]
    terms = data.get("terms")
    if terms is None:
        raise InputError("combination payload has no 'terms' key")
    built = []
    for entry in terms:
        gens = [parse_polynomial(g, ring) for g in entry["ideal"]]
        built.append((int(entry["coefficient"]), Ideal(ring, gens)))
    return SignedCombination(ring, built)


def _ideal_strings(I: Ideal) -> list[str]:
    return [format_polynomial(g) for g in I.generators]


def _series_result(series, ratios) -> dict:
    entries = []
    for (n, q, value), (_, ratio) in zip(series.entries, ratios):
        entries.append({"n": n, "q": q, "value": value,
                        "ratio": [ratio.numerator, ratio.denominator]})
    return {"kind": series.kind, "entries": entries}


def _combination_result(combo: SignedCombination) -> dict:
    return {"terms": [{"coefficient": c, "ideal": _ideal_strings(J)} for c, J in combo.terms]}


def run_job(spec: JobSpec) -> ReportDocument:
    started = time.perf_counter()
    if spec.command == "selfcheck":
        checks = run_selfchecks()
        doc = ReportDocument(spec, {"checks": checks, "passed": all(c["pass"] for c in checks)})
        doc.timing_ms = (time.perf_counter() - started) * 1000
        return doc
    ring = build_ring({"p": spec.p, "vars": list(spec.variables), "quotient": list(spec.quotient)})
    ideal = build_ideal(ring, spec.ideal)
    ring_echo = {"p": ring.p, "vars": list(ring.variables),
                 "quotient": [format_polynomial(g) for g in ring.defining]}
    ideal_echo = _ideal_strings(ideal)
    n_max = spec.n_max if spec.n_max is not None else default_n_max(ring.p)
    q_list = tuple(spec.q_list) if spec.q_list else default_q_list(ring.p)
    policy = SelectionPolicy(degree=spec.degree, retries=spec.retries)

    def execute() -> tuple[dict, dict | None]:
        if spec.command == "hk":
            series = hk_series(ideal, n_max)
            return _series_result(series, multiplicity_estimate(series)), None
        if spec.command == "ghk":
            series = ghk_series(ideal, n_max)
            return _series_result(series, multiplicity_estimate(series)), None
        if spec.command == "lcprobe":
            report = lc_probe(ideal, n_max)
            return {"per_q": [{"q": q, "n_q": nq} for q, nq in report.per_q],
                    "inferred_n": report.inferred_N,
                    "verdict": report.verdict}, None
        if spec.command == "decompose":
            combo, cert = decompose_general(ideal, q_list, spec.seed, policy)
            return _combination_result(combo), cert.to_payload()
        if spec.command == "verify":
            if spec.combination is None:
                raise InputError("verify needs a combination payload")
            combo = combination_from_payload(ring, spec.combination)
            cert = verify_identity(ideal, combo, q_list)
            result = _combination_result(combo)
            result["verdict"] = "pass" if cert.passed else "fail"
            return result, cert.to_payload()
        raise InputError(f"unknown command {spec.command!r}")

    if spec.budget is not None:
        with pair_budget(spec.budget):
            result, certificate = execute()
    else:
        result, certificate = execute()
    doc = ReportDocument(spec, result, certificate, ring_echo=ring_echo, ideal_echo=ideal_echo)
    doc.timing_ms = (time.perf_counter() - started) * 1000
    return doc


def render_payload(payload: dict, fmt: str) -> bytes:
    """Serialize a report payload: compact sorted JSON, or CSV for tables."""
    if fmt == "json":
        return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()
    if fmt == "csv":
        result = payload.get("result", {})
        buf = io.StringIO()
        if "entries" in result:
            buf.write("n,q,value\n")
            for e in result["entries"]:
                buf.write(f"{e['n']},{e['q']},{e['value']}\n")
        elif "per_q" in result:
            buf.write("q,n_q\n")
            for e in result["per_q"]:
                buf.write(f"{e['q']},{e['n_q']}\n")
        else:
            raise InputError(
                f"command {payload.get('command')!r} has no CSV table; use --format json")
        return buf.getvalue().encode()
    raise InputError(f"unknown output format {fmt!r}")


def human_summary(payload: dict) -> str:
    """One compact human-readable block for terminal output."""
    lines = [f"command: {payload['command']}"]
    result = payload.get("result", {})
    if "entries" in result:
        lines.append("  n    q      value    ratio")
        for e in result["entries"]:
            num, den = e["ratio"]
            ratio = Fraction(num, den)
            lines.append(f"  {e['n']:<4} {e['q']:<6} {e['value']:<8} {ratio}")
    if "per_q" in result:
        lines.append("  q      N_q")
        for e in result["per_q"]:
            lines.append(f"  {e['q']:<6} {e['n_q']}")
        lines.append(f"  inferred N: {result['inferred_n']}  verdict: {result['verdict']}")
    if "terms" in result:
        for t in result["terms"]:
            lines.append(f"  {t['coefficient']:+d} * l(R / ({', '.join(t['ideal'])})^[q])")
    if "verdict" in result and "per_q" not in result:
        lines.append(f"  verdict: {result['verdict']}")
    cert = payload.get("certificate")
    if cert:
        ok = all(c.get("pass", True) for c in cert.get("checks", []))
        lines.append(f"  certificate: {'all checks passed' if ok else 'SOME CHECKS FAILED'} "
                     f"over q in {cert.get('q_list')}")
    if "checks" in result:
        for c in result["checks"]:
            lines.append(f"  [{'ok' if c['pass'] else 'FAIL'}] {c['name']}")
        lines.append(f"  selfcheck: {'passed' if result['passed'] else 'FAILED'}")
    return "\n".join(lines)
