"""A quick verification campaign over connected graphs on at most five vertices."""
from zagreb_bounds.graph import CorpusSpec
from zagreb_bounds.verify import run_properties

corpus = (CorpusSpec(3, 5),)
for report in run_properties(["P1", "P3", "P4", "P5", "P6"], corpus):
    print(report.to_text())
