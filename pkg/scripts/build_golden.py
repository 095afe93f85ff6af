"""Write tables/table{1,2,3}.json from the closed-form reference rows.

The golden rows never touch a Cartan matrix; they come straight from the
closed forms in ``affinecox.tables``.  Rows carrying a correction have a
``comment`` field explaining it.  Re-run after changing the tables module:

    python scripts/build_golden.py [--max-rank 12]
"""
import argparse
import json
from pathlib import Path

from affinecox.cli import exponents_json, factors_json, poly_json, request_json
from affinecox.tables import table1_rows, table2_rows, table3_rows

OUT = Path(__file__).resolve().parent.parent / "tables"


def row_record(row, which):
    if which == 1:
        payload = {"exponents": exponents_json(row.exponents)}
    else:
        payload = {"polynomial": poly_json(row.polynomial), "factors": factors_json(row.factors)}
    rec = {"request": request_json(row.id, row.class_index), "payload": payload}
    if row.comment:
        rec["comment"] = row.comment
    return rec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-rank", type=int, default=12)
    args = ap.parse_args()
    OUT.mkdir(exist_ok=True)
    sources = {1: table1_rows, 2: table2_rows, 3: table3_rows}
    for which, rows in sources.items():
        doc = {
            "table": which,
            "max_rank": args.max_rank,
            "rows": [row_record(r, which) for r in rows(args.max_rank)],
        }
        path = OUT / f"table{which}.json"
        path.write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {path} ({len(doc['rows'])} rows)")


if __name__ == "__main__":
    main()
