import click, json, pytest, random, sys, os
from functools import wraps
from flask.cli import AppGroup
from rich.console import Console
from rich.table import Table

from App.main import create_app
from App.models import ClaimReport, Mat2, RingId, EUCLIDEAN_DISCRIMINANTS
from App.controllers import (
    check_bounds, check_claim, evaluate, evaluate_tokens, format_tokens, format_word,
    generators, lift_to_sl, parse_tokens, parse_word, random_matrix, represent, ring_table,
)
from App.controllers.embeddings import embedding_client, format_element

app = create_app()
console = Console()

RING_CHOICES = click.Choice([str(d) for d in EUCLIDEAN_DISCRIMINANTS])


def _print_banner():
    try:
        banner_path = 'App/banner.txt'
        if os.path.exists(banner_path):
            with open(banner_path, 'r', encoding='utf-8') as f:
                console.print("\n" + f.read(), highlight=False)
        else:
            console.print("\n" + "=" * 60)
            console.print("                    B I A N C H I")
            console.print("=" * 60)
    except OSError:
        console.print("\nBIANCHI")


def _print_table(title, headers, rows):
    if not rows:
        console.print("No data available")
        return
    table = Table(title=title)
    for header in headers:
        table.add_column(header)
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    console.print(table)


def _emit_json(schema, payload):
    payload = {"schema": f"{schema}/{app.config['JSON_SCHEMA_VERSION']}", **payload}
    click.echo(json.dumps(payload))


def usage_errors(command):
    """Bad input of any kind (parse, determinant, ring, budget) exits with code 2."""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValueError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(2)
    return wrapper


def _read_payload(payload):
    if payload == "-":
        return click.get_text_stream("stdin").read()
    return payload


def _ring(d):
    return RingId(int(d) if d is not None else int(app.config['DEFAULT_RING']))


def _rings(which):
    if which == "all":
        return [RingId(d) for d in EUCLIDEAN_DISCRIMINANTS]
    return [RingId(int(which))]


def _setting(value, key):
    return value if value is not None else app.config[key]


'''
Ring Commands
'''

ring_cli = AppGroup('ring', help='Integer ring commands')

@ring_cli.command("tables", help="Entry sets, units and Euclidean minima of the five rings")
@click.argument("which", default="all")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@usage_errors
def ring_tables_command(which, as_json):
    tables = [ring_table(ring) for ring in _rings(which)]
    if as_json:
        _emit_json("ring-table", {"rings": tables})
    else:
        _print_banner()
        rows = [
            [t["d"], t["omega"], t["kappa"], t["entry_bound"],
             " ".join(str(RingId(t["d"])(*map(int, u))) for u in t["units"]),
             t["entry_count"], "yes" if t["matches_table"] else "NO"]
            for t in tables
        ]
        _print_table("O_d data", ["d", "omega", "kappa", "1/(1-kappa)", "units", "|S|", "matches"], rows)
    if not all(t["matches_table"] for t in tables):
        sys.exit(1)

app.cli.add_command(ring_cli)


'''
Word Commands
'''

word_cli = AppGroup('word', help='Generator word commands')

@word_cli.command("repr", help="Decompose a determinant-1 matrix (JSON, or - for stdin) into a generator word")
@click.argument("matrix")
@click.option("--d", "d", type=RING_CHOICES, default=None, help="Ring of the matrix")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@usage_errors
def word_repr_command(matrix, d, as_json):
    data = json.loads(_read_payload(matrix))
    carries_ring = isinstance(data, dict) and "d" in data
    ring = _ring(d) if d is not None or not carries_ring else None
    M = Mat2.from_json(data, ring)
    word = represent(M)
    report = check_bounds(M, word)
    if as_json:
        _emit_json("word-repr", {
            "word": format_word(word),
            "rep": word.get_json(),
            "sl_tokens": format_tokens(lift_to_sl(word)),
            "bounds": report.get_json(),
        })
    else:
        click.echo(format_word(word))
        click.echo(json.dumps(report.get_json()))
    if not report.bounds_ok:
        sys.exit(1)

@word_cli.command("eval", help="Evaluate a word (or, with --sl, a generator token list) to its matrix")
@click.argument("word")
@click.option("--d", "d", type=RING_CHOICES, default=None, help="Ring of the word")
@click.option("--sl", "sl_tokens", is_flag=True, help="Read tokens like 'A T^3 U^-1 A^2'")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@usage_errors
def word_eval_command(word, d, sl_tokens, as_json):
    ring = _ring(d)
    text = _read_payload(word)
    M = evaluate_tokens(ring, parse_tokens(text)) if sl_tokens else evaluate(parse_word(ring, text))
    if as_json:
        _emit_json("matrix", M.get_json())
    else:
        click.echo(str(M))

@word_cli.command("roundtrip", help="Decompose and re-evaluate random matrices, checking every bound")
@click.argument("which", default="all")
@click.option("--count", default=None, type=int, help="Matrices per ring")
@click.option("--length", default=None, type=int, help="Maximum random word length")
@click.option("--seed", default=None, type=int, help="Random seed")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@usage_errors
def word_roundtrip_command(which, count, length, seed, as_json):
    count = _setting(count, 'ROUNDTRIP_COUNT')
    length = _setting(length, 'ROUNDTRIP_MAX_LENGTH')
    seed = _setting(seed, 'RANDOM_SEED')
    summaries = [_roundtrip(ring, count, length, seed) for ring in _rings(which)]
    if as_json:
        _emit_json("roundtrip", {"seed": seed, "rings": summaries})
    else:
        _print_banner()
        rows = [[s["d"], s["count"], s["failures"], s["strict_violations"], s["max_k"], s["max_norm_bits"]]
                for s in summaries]
        _print_table(f"Round trips (seed {seed})", ["d", "count", "failures", "strict notes", "max k", "max |M| bits"], rows)
    if any(s["failures"] for s in summaries):
        sys.exit(1)

def _roundtrip(ring, count, length, seed):
    rng = random.Random(seed * 100 + ring.d)
    failures = strict_violations = max_k = max_bits = 0
    for _ in range(count):
        M = random_matrix(ring, rng, length)
        try:
            word = represent(M)
        except AssertionError:
            failures += 1
            continue
        report = check_bounds(M, word)
        if evaluate(word) != M or evaluate_tokens(ring, lift_to_sl(word)) != M or not report.bounds_ok:
            failures += 1
        if not report.strict_iteration_ok:
            strict_violations += 1
        max_k = max(max_k, report.k)
        max_bits = max(max_bits, report.norm.bit_length())
    return {
        "d": ring.d,
        "count": count,
        "failures": failures,
        "strict_violations": strict_violations,
        "max_k": max_k,
        "max_norm_bits": max_bits,
    }

app.cli.add_command(word_cli)


'''
Claim Commands
'''

claim_cli = AppGroup('claim', help='Exhaustive norm-monotonicity search')

@claim_cli.command("verify", help="Check that no reduction step grows the matrix norm over the small entry set")
@click.argument("which", default="all")
@click.option("--workers", default=None, type=int, help="Worker processes")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@click.option("--inject-counterexample", "inject", is_flag=True, hidden=True)
@usage_errors
def claim_verify_command(which, workers, as_json, inject):
    workers = _setting(workers, 'WORKERS')
    reports = [check_claim(ring, workers=workers) for ring in _rings(which)]
    if inject:
        first = reports[0]
        A = generators(first.ring)[0]
        reports[0] = ClaimReport(
            ring=first.ring,
            candidates_examined=first.candidates_examined,
            counterexamples=first.counterexamples + ((A, A @ A),),
            elapsed_ms=first.elapsed_ms,
        )
    if as_json:
        for report in reports:
            _emit_json("claim-report", report.get_json())
    else:
        _print_banner()
        rows = [[r.ring.d, r.candidates_examined, len(r.counterexamples), f"{r.elapsed_ms:.1f}"] for r in reports]
        _print_table("Norm monotonicity", ["d", "candidates", "counterexamples", "ms"], rows)
        for report in reports:
            for M, following in report.counterexamples:
                console.print(f"O_{report.ring.d}: {M} -> {following}")
    if not all(report.holds for report in reports):
        sys.exit(1)

app.cli.add_command(claim_cli)


'''
Embedding Commands
'''

embed_cli = AppGroup('embed', help='Word (semi)group embedding commands')

@embed_cli.command("list", help="List the embedding catalog")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
def embed_list_command(as_json):
    specs = [spec.get_json() for spec in embedding_client.catalog.specs.values()]
    if as_json:
        _emit_json("embedding-catalog", {"specs": specs})
    else:
        _print_table("Embeddings", ["name", "domain", "codomain"],
                     [[s["name"], s["domain"], s["codomain"]] for s in specs])

@embed_cli.command("run", help="Evaluate an element like 'a b A | c' or scan for collisions with --scan")
@click.argument("name")
@click.argument("element", required=False)
@click.option("--scan", "max_len", default=None, type=int, help="Check injectivity up to this word length")
@click.option("--budget", default=None, type=int, help="Largest number of elements a scan may enumerate")
@click.option("--workers", default=None, type=int, help="Worker processes for --scan")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@usage_errors
def embed_run_command(name, element, max_len, budget, workers, as_json):
    spec = embedding_client.get(name)
    if max_len is not None:
        result = embedding_client.scan_json(
            spec, max_len,
            budget=_setting(budget, 'SCAN_BUDGET'),
            workers=_setting(workers, 'WORKERS'),
        )
        if as_json:
            _emit_json("embedding-scan", result)
        elif result["collision"]:
            click.echo(f"{name}: collision {result['collision'][0]} ~ {result['collision'][1]}")
        else:
            click.echo(f"{name}: no collision among {result['elements']} elements up to length {max_len}")
        if result["collision"]:
            sys.exit(1)
        return
    if element is None:
        raise click.UsageError("Give an element to evaluate or --scan N")
    parsed, M = embedding_client.evaluate(name, _read_payload(element))
    if as_json:
        _emit_json("embedding-eval", {
            "spec": name,
            "element": format_element(parsed),
            "matrix": M.get_json(),
            "det": spec.kind.encode(M.det()),
        })
    else:
        click.echo(f"{name}({format_element(parsed)}) = {M}")

app.cli.add_command(embed_cli)


'''
Test Commands
'''

test = AppGroup('test', help='Testing commands')

def _run_tests(area, type):
    if type == "unit":
        sys.exit(pytest.main(["-k", f"{area}UnitTests"]))
    elif type == "int":
        sys.exit(pytest.main(["-k", f"{area}IntegrationTests"]))
    else:
        sys.exit(pytest.main(["-k", area]))

@test.command("ring", help="Run ring and matrix tests")
@click.argument("type", default="all")
def ring_tests_command(type):
    _run_tests("Ring", type)

@test.command("word", help="Run word decomposition tests")
@click.argument("type", default="all")
def word_tests_command(type):
    _run_tests("Word", type)

@test.command("claim", help="Run claim verifier tests")
@click.argument("type", default="all")
def claim_tests_command(type):
    _run_tests("Claim", type)

@test.command("embed", help="Run embedding tests")
@click.argument("type", default="all")
def embed_tests_command(type):
    _run_tests("Embedding", type)

@test.command("cli", help="Run command-line tests")
@click.argument("type", default="all")
def cli_tests_command(type):
    _run_tests("Cli", type)

app.cli.add_command(test)

@app.cli.command("test-all", help="Run all pytest tests (unit + integration).")
def test_all():
    """Run entire test suite (unit + integration) with pytest -q."""
    rc = pytest.main(['-q'])
    sys.exit(rc)
