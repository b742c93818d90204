"""Crystal-basis genetic code toolkit.

Thin python layer over the C++ core: codon labels, crystal coupling,
misreading checks, and the multiplet-merging pipeline.
"""

from gcwe._core import (
    amino_acid,
    check,
    check_double,
    codon_labels,
    couple,
    default_config,
    limit_checks,
    q_number,
    run_pipeline,
    table_check,
    table_rows,
)

__all__ = [
    "amino_acid",
    "check",
    "check_double",
    "codon_labels",
    "couple",
    "default_config",
    "limit_checks",
    "q_number",
    "run_pipeline",
    "table_check",
    "table_rows",
]
