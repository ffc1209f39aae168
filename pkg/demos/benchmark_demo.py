"""Running the benchmark harness as a library.

Builds a mid-sized graph, runs the indexed/baseline comparison grid with the
same machinery the `tracequery bench` subcommand uses, and prints the CSV.
Every query is verified against the baseline before timing is reported, and
with timing suppressed the whole report is reproducible byte for byte.
"""

from tracequery import BenchConfig, rows_to_csv, run_bench, stats_report
from tracequery.generate import grid_with_matchings


def main():
    # A 40x40 grid with one extra random matching: sparse but irregular.
    g = grid_with_matchings(40, 40, matchings=1, seed=7)
    print(f"benchmark graph: {g.n} vertices, {g.m} edges")

    report = stats_report(g)
    print(f"ordering: {report['strategy']} (d={report['d']}, s2={report['s2']})\n")

    cfg = BenchConfig(
        tasks=("freq", "list", "count"),
        sizes=("log", "sqrt"),
        queries=200,
        seed=3,
        network="demo-grid",
    )
    rows = run_bench(g, cfg)
    print(rows_to_csv(rows))

    # Checksums pair up across algorithms because each indexed answer was
    # compared with the baseline answer before being folded into the digest.
    cells = {}
    for row in rows:
        cells.setdefault((row.task, row.size_class), set()).add(row.checksum)
    assert all(len(sums) == 1 for sums in cells.values())
    print("per-cell checksums match between indexed and baseline runs")

    deterministic = run_bench(g, BenchConfig(tasks=("freq",), sizes=("log",), queries=50, seed=3, network="demo-grid", measure_time=False))
    again = run_bench(g, BenchConfig(tasks=("freq",), sizes=("log",), queries=50, seed=3, network="demo-grid", measure_time=False))
    assert rows_to_csv(deterministic) == rows_to_csv(again)
    print("timing-free reruns are byte-identical")


if __name__ == "__main__":
    main()
