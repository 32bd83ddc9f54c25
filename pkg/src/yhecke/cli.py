"""Command line front end: a thin client of the HTTP service.

By default requests are answered by an in-process instance of the app (no
sockets, no network); ``--server URL`` points the same client at a running
service instead.  Exit codes: 0 success, 1 usage error, 2 computation error,
3 verification mismatch.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

from .braids import parse_braid_letters


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    import warnings

    with warnings.catch_warnings():
        # starlette's bundled test client warns about the httpx pin; harmless
        # for the in-process transport use here
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(client: httpx.Client, path: str, payload: dict) -> dict:
    resp = client.post(path, json=payload)
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail")
        message = detail["message"] if isinstance(detail, dict) else str(detail)
        click.echo(f"usage error: {message}", err=True)
        sys.exit(1)
    if resp.status_code == 409:
        detail = resp.json().get("detail", {})
        click.echo(f"computation error: {detail.get('message', resp.text)}", err=True)
        sys.exit(2)
    resp.raise_for_status()
    return resp.json()


def _emit_json(data: dict):
    click.echo(json.dumps(data, sort_keys=True, separators=(",", ":")))


@click.group()
def main():
    """Exact link invariants from the Yokonuma-Hecke trace."""


@main.command()
@click.option("--braid", "braid_text", default="", help="whitespace separated signed letters")
@click.option("--strands", type=int, required=True)
@click.option("--inv", "invariant",
              type=click.Choice(["gamma", "delta", "Theta", "theta", "jones", "homflypt"]),
              required=True)
@click.option("--d", "d", type=int, default=None)
@click.option("--D", "subset", default=None, help="comma separated residues, e.g. 0,1")
@click.option("--route", type=click.Choice(["trace", "skein", "comb", "all"]), default="trace")
@click.option("--E", "e_value", default=None, help="evaluate E at this exact value")
@click.option("--framings", default=None, help="comma separated framings (gamma)")
@click.option("--generic-z", is_flag=True, help="keep z generic (gamma/delta)")
@click.option("--json", "as_json", is_flag=True)
@click.option("--server", default=None, help="base URL of a running service")
def invariant(braid_text, strands, invariant, d, subset, route, e_value, framings,
              generic_z, as_json, server):
    """Compute one invariant of a braid closure."""
    try:
        letters = parse_braid_letters(braid_text)
        payload = {
            "braid": list(letters),
            "strands": strands,
            "invariant": invariant,
            "route": route,
            "specialized": not generic_z,
        }
        if d is not None:
            payload["d"] = d
        if subset:
            payload["D"] = [int(x) for x in subset.split(",")]
        if e_value:
            payload["E"] = e_value
        if framings:
            payload["framings"] = [int(x) for x in framings.split(",")]
    except ValueError as exc:
        click.echo(f"usage error: {exc}", err=True)
        sys.exit(1)
    with _client(server) as client:
        data = _post(client, "/invariant", payload)
    if as_json:
        _emit_json(data)
        return
    routes = data["routes"]
    if len(routes) == 1:
        click.echo(routes[0]["value"])
    else:
        for rv in routes:
            click.echo(f"{rv['route']}: {rv['value']}")
        if data.get("agree") is not None:
            click.echo("AGREE" if data["agree"] else "DISAGREE")
            if not data["agree"]:
                sys.exit(3)


@main.command()
@click.option("--table", type=click.Choice(["dims", "esystem", "irreps"]), required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--n", "n", type=int, default=3)
@click.option("--json", "as_json", is_flag=True)
@click.option("--server", default=None)
def tables(table, d, n, as_json, server):
    """Print dimension / E-system / representation tables."""
    with _client(server) as client:
        data = _post(client, "/tables", {"table": table, "d": d, "n": n})
    if as_json:
        _emit_json(data)
        return
    click.echo(", ".join(data["headers"]))
    for row in data["rows"]:
        click.echo(", ".join(row))


@main.command()
@click.option("--catalog", "catalog_path", type=click.Path(exists=True), required=True)
@click.option("--pairs", "pairs_path", type=click.Path(exists=True), required=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--server", default=None)
def pairs(catalog_path, pairs_path, as_json, server):
    """Differences theta(A) - theta(B) for listed catalog pairs, with optional
    exact-match verdicts against reference polynomials."""
    payload = {
        "catalog_text": open(catalog_path).read(),
        "pairs_text": open(pairs_path).read(),
    }
    with _client(server) as client:
        data = _post(client, "/pairs", payload)
    mismatch = False
    if as_json:
        _emit_json(data)
    for r in data["results"]:
        if not as_json:
            click.echo(f"theta({r['first']}) - theta({r['second']}) = {r['difference']}")
            if r["match"] is not None:
                click.echo("MATCH" if r["match"] else f"MISMATCH (reference: {r['reference']})")
        if r["match"] is False:
            mismatch = True
    if mismatch:
        sys.exit(3)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
