"""Run verification targets, write their reports and export a drawing."""

import tempfile
from pathlib import Path

from oneplane.constructions import gen_theorem2
from oneplane.export import to_dot, to_svg
from oneplane.verify import corpus_check, verify

with tempfile.TemporaryDirectory() as tmp:
    for target, params in [("prop2", {"k": 5}), ("thm2", {"k": 2}), ("thm4", {"k": 2})]:
        report = verify(target, out_dir=tmp, **params)
        print(report.summary().splitlines()[0])
    print("artifacts:", sorted(p.name for p in Path(tmp).iterdir()))

print(corpus_check().summary().splitlines()[0])

d = gen_theorem2(2)
print(to_dot(d).splitlines()[0], "...")
print(f"SVG of {len(to_svg(d))} characters")
