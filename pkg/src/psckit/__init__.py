"""psckit: measure, explain and mitigate code-smell propensity of code LLMs.

The toolkit consumes externally produced token-probability traces and
provides: propensity scoring over smell-aligned token spans, a native
smell detector plus a bridge schema for external linters, semantic-
preserving transformations with an equivalence harness, ANOVA-based
robustness reports, information-gain comparisons against reference
metrics, backdoor-adjusted causal effect estimation with refutation
tests, and a prompt-based mitigation experiment runner.
"""

__version__ = "0.1.0"
