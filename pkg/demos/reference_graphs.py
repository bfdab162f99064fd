"""Indices and degree-pair bounds for the three embedded reference graphs."""
from zagreb_bounds import best_bound, compute_all, degree_sequence, evaluate
from zagreb_bounds.example_graphs import reference_graphs
from zagreb_bounds.verify import table1_text

for name, g in reference_graphs().items():
    ds = degree_sequence(g)
    values = compute_all(g)
    print(f"{name}: n={g.n} m={g.m} degrees={list(ds.degrees)}")
    print(f"  M1={values['M1'].value}  M2={values['M2'].value}  lambda1={float(values['spectral_radius'].value):.6f}")
    for bid in ("cor_zte2", "cor_z2te1", "cor_z2te2", "base_xu2"):
        bv = evaluate(bid, ds)
        print(f"  {bid:<10} {float(bv.value):10.4f}  (exact {bv.value})")
    best = best_bound(ds)
    print(f"  best kernel bound {float(best.value):.4f} at removed={best.spec.removed} pair={best.spec.pair}")

print()
print(table1_text())
