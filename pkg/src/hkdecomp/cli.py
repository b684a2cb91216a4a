"""Command-line front end.

The CLI is a thin client over the jobs layer: it parses the input
document and flags into a job, runs it in process (or ships it to a
running service with --server), and writes the report. Exit status 0
covers success and recorded verification failures; nonzero means the
job itself could not run (bad input, budget exhaustion, failed element
selection).
"""

import json
import sys
from pathlib import Path

import click

from . import __version__
from .errors import (BudgetExceededError, CertificateError,
                     ElementSelectionError, InputError, ToolkitError)
from .jobs import (JobSpec, human_summary, parse_input_document, render_payload,
                   run_job)

EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_MATH = 1


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_document(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}", EXIT_INPUT)
    try:
        return parse_input_document(text)
    except ToolkitError as exc:
        _fail(str(exc), EXIT_INPUT)


def _parse_qlist(text: str | None):
    if not text:
        return None
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        _fail(f"bad --qlist {text!r}; expected comma-separated integers", EXIT_INPUT)


def _run(spec: JobSpec, server: str | None, fmt: str, out: str | None):
    if server:
        payload, timing = _run_remote(spec, server)
    else:
        try:
            doc = run_job(spec)
        except BudgetExceededError as exc:
            _fail(str(exc), EXIT_BUDGET)
        except (ElementSelectionError, CertificateError) as exc:
            _fail(str(exc), EXIT_MATH)
        except ToolkitError as exc:
            _fail(str(exc), EXIT_INPUT)
        payload, timing = doc.payload(), doc.timing_ms
    try:
        blob = render_payload(payload, fmt)
    except InputError as exc:
        _fail(str(exc), EXIT_INPUT)
    if out:
        Path(out).write_bytes(blob)
        click.echo(human_summary(payload), err=True)
        click.echo(f"wrote {out} ({timing:.1f} ms)", err=True)
    else:
        sys.stdout.buffer.write(blob)
        sys.stdout.buffer.flush()
        click.echo(f"({timing:.1f} ms)", err=True)
    if spec.command == "selfcheck" and not payload["result"]["passed"]:
        sys.exit(EXIT_MATH)


def _run_remote(spec: JobSpec, server: str):
    import httpx

    body = {
        "command": spec.command,
        "ring": {"p": spec.p, "vars": list(spec.variables), "quotient": list(spec.quotient)},
        "ideal": list(spec.ideal),
        "params": {"n_max": spec.n_max,
                   "q_list": list(spec.q_list) if spec.q_list else None,
                   "seed": spec.seed, "degree": spec.degree,
                   "retries": spec.retries, "budget": spec.budget},
    }
    if spec.combination is not None:
        body["combination"] = spec.combination
    try:
        resp = httpx.post(f"{server.rstrip('/')}/jobs", json=body, timeout=600.0)
    except httpx.HTTPError as exc:
        _fail(f"cannot reach {server}: {exc}", EXIT_INPUT)
    if resp.status_code != 200:
        detail = resp.json().get("detail", resp.text) if resp.content else resp.text
        _fail(f"server rejected the job ({resp.status_code}): {detail}",
              EXIT_BUDGET if resp.status_code == 409 else EXIT_INPUT)
    data = resp.json()
    return data["report"], data["timing_ms"]


def _common_options(fn):
    fn = click.option("--input", "input_path", type=str, required=True,
                      help="ring/ideal document")(fn)
    fn = click.option("--nmax", type=int, default=None, help="largest Frobenius exponent n")(fn)
    fn = click.option("--qlist", type=str, default=None, help="comma-separated q values")(fn)
    fn = click.option("--seed", type=int, default=0, help="seed for element selection")(fn)
    fn = click.option("--degree", type=int, default=1, help="starting candidate degree")(fn)
    fn = click.option("--retries", type=int, default=8, help="candidate retries per degree")(fn)
    fn = click.option("--budget", type=int, default=None, help="Groebner pair budget")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)(fn)
    fn = click.option("--out", type=str, default=None, help="output path (default stdout)")(fn)
    fn = click.option("--server", type=str, default=None,
                      help="base URL of a running service; runs locally when omitted")(fn)
    return fn


def _build_spec(command, input_path, nmax, qlist, seed, degree, retries, budget,
                combination=None) -> JobSpec:
    ring_spec, gens = _load_document(input_path)
    try:
        return JobSpec(command=command, p=ring_spec["p"],
                       variables=tuple(ring_spec["vars"]),
                       quotient=tuple(ring_spec["quotient"]),
                       ideal=tuple(gens), n_max=nmax, q_list=_parse_qlist(qlist),
                       seed=seed, degree=degree, retries=retries, budget=budget,
                       combination=combination)
    except InputError as exc:
        _fail(str(exc), EXIT_INPUT)


@click.group()
@click.version_option(version=__version__)
def main():
    """Hilbert-Kunz series, torsion probes, and certified decompositions."""


def _series_command(name, help_text):
    @main.command(name=name, help=help_text)
    @_common_options
    def _cmd(input_path, nmax, qlist, seed, degree, retries, budget, fmt, out, server):
        spec = _build_spec(name, input_path, nmax, qlist, seed, degree, retries, budget)
        _run(spec, server, fmt or "csv", out)

    return _cmd


_series_command("hk", "Classical Hilbert-Kunz series of an m-primary ideal.")
_series_command("ghk", "Generalized Hilbert-Kunz series via saturation.")
_series_command("lcprobe", "Per-q torsion annihilator exponents and linear bound.")


@main.command(name="decompose",
              help="Decompose the generalized series into classical ones, with a certificate.")
@_common_options
def decompose_cmd(input_path, nmax, qlist, seed, degree, retries, budget, fmt, out, server):
    spec = _build_spec("decompose", input_path, nmax, qlist, seed, degree, retries, budget)
    _run(spec, server, fmt or "json", out)


@main.command(name="verify",
              help="Re-verify a decomposition report against the saturation route.")
@_common_options
@click.option("--combination", "combination_path", type=str, required=True,
              help="JSON report produced by decompose")
def verify_cmd(input_path, nmax, qlist, seed, degree, retries, budget, fmt, out, server,
               combination_path):
    try:
        data = json.loads(Path(combination_path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        _fail(f"cannot read combination file {combination_path}: {exc}", EXIT_INPUT)
    if qlist is None and isinstance(data.get("certificate"), dict):
        qlist = ",".join(str(q) for q in data["certificate"].get("q_list", []))
    spec = _build_spec("verify", input_path, nmax, qlist, seed, degree, retries, budget,
                       combination=data)
    _run(spec, server, fmt or "json", out)


@main.command(name="selfcheck", help="Run the built-in invariant corpus.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="json")
@click.option("--out", type=str, default=None)
@click.option("--server", type=str, default=None)
def selfcheck_cmd(fmt, out, server):
    _run(JobSpec(command="selfcheck"), server, fmt, out)


@main.command(name="serve", help="Run the HTTP service.")
@click.option("--host", type=str, default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve_cmd(host, port):
    import uvicorn

    uvicorn.run("hkdecomp.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
