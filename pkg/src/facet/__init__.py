"""Interactive, example-driven structural search over Java-like source code.

The package is organized around a small pipeline: parse source into a
syntax tree (javaparse), extract ground facts about the interesting nodes
(facts, factbase), evaluate conjunctive queries over those facts (queries,
evaluate), and refine a query from user labels one atom at a time (learner,
session).  The harness drives simulated users over a bundled corpus, and the
cli/api modules expose the whole thing.
"""

__version__ = "0.1.0"
