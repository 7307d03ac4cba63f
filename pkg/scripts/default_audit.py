"""Run the default audit grid and write JSON, CSV and Markdown reports.

    python scripts/default_audit.py [--out reports] [--workers 4]
"""

import argparse
import time
from pathlib import Path

from thornlab import audit_engine as ae


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--out", default="reports")
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    report = ae.run(ae.GridConfig(), workers=args.workers)
    elapsed = time.perf_counter() - start
    for fmt, suffix in [("json", "json"), ("csv", "csv"), ("markdown", "md")]:
        (out / f"default_audit.{suffix}").write_text(ae.render(report, fmt))
    print(ae.render(report, "markdown"))
    print(f"{len(report.records)} records in {elapsed:.1f}s -> {out}/")


if __name__ == "__main__":
    main()
