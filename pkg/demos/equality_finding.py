"""Replay the equality-class finding for the one-removed modified M1 bound.

The stated extremal classes disagree with when the bound is actually tight; the
kernel is tight exactly when d_3 = ... = d_{n-1}.
"""
from zagreb_bounds import degree_sequence, evaluate, modified_first_zagreb, parse_graph6
from zagreb_bounds.bounds import NAMED_BOUNDS
from zagreb_bounds.verify import IFF_CORPUS, check_equality_iff

report = check_equality_iff(IFF_CORPUS, "mm1_one")
print(f"{report.status}: {len(report.violations)} findings over {report.graphs_checked} graphs")
for v in report.violations[:5]:
    g = parse_graph6(v.graph6)
    ds = degree_sequence(g)
    bv = evaluate("mm1_one", ds)
    tight = bv.value == modified_first_zagreb(g).value
    stated = NAMED_BOUNDS["mm1_one"].stated_equality(ds)
    print(f"  {v.graph6:<8} degrees={list(ds.degrees)} tight={tight} stated={stated}  {v.context}")
