"""Break each formula's default-grid outcome down by r, s and uniform t.

Shows, for instance, whether a closed form fails everywhere or only on a
boundary value of one parameter.

    python scripts/mismatch_profile.py [--formula T1 --formula C1 ...]
"""

import argparse
from collections import defaultdict

from thornlab import audit_engine as ae


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--formula", action="append")
    args = p.parse_args()

    cfg = ae.GridConfig(formulas=args.formula or [])
    report = ae.run(cfg)
    by = defaultdict(lambda: defaultdict(lambda: [0, 0]))
    for rec in report.records:
        if rec.status == ae.INAPPLICABLE:
            continue
        pt = rec.point
        keys = [f"r={pt.r}"]
        if pt.s is not None:
            keys.append(f"s={pt.s}")
        if len(set(pt.t)) == 1:
            keys.append(f"t={pt.t[0]}")
        for k in keys:
            by[rec.formula][k][rec.status == ae.MISMATCH] += 1

    for s in report.summary:
        if not s.tested:
            continue
        print(f"{s.formula}: {s.mismatched}/{s.tested} mismatching")
        for key in sorted(by[s.formula], key=lambda k: (k[0], int(k[2:]))):
            ok, bad = by[s.formula][key]
            flag = "all match" if bad == 0 else ("all differ" if ok == 0 else f"{bad} of {ok + bad} differ")
            print(f"    {key:<5} {flag}")


if __name__ == "__main__":
    main()
