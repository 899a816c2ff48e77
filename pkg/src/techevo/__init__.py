"""techevo: S-curve fitting and evolutionary-coefficient estimation for
functional measures of technology.

A technology's objectively measurable characteristics (its functional
measures) trace S-shaped advances over time.  This package fits the
symmetric logistic curve to such series, estimates how fast a subsystem
technology evolves relative to its host via the log-log power law
P = A * H**B, reports the full least-squares inference block, and
classifies the evolutionary pathway (Underdevelopment / Parallel /
Development) from the test of B = 1.

Typical use::

    from techevo import align, estimate_evolution, classify_pathway

    pair = align(host_series, sub_series)
    fit = estimate_evolution(pair)
    verdict = classify_pathway(fit, alpha=0.01)

The ``techevo`` CLI wraps the same pipeline for CSV files.
"""

__version__ = "0.1.0"

from . import errors
from .coevolution import (
    EvolutionFit,
    RelationConstant,
    check_relation,
    estimate_evolution,
    evolution_fit_from_summary,
    predict_subsystem,
    relation_constant,
)
from .logistic import (
    KSearchConfig,
    LogisticFit,
    LogisticParams,
    fit_logistic,
    linearize,
    logistic_value,
    solve_time,
)
from .pathway import (
    DEVELOPMENT,
    INCONCLUSIVE,
    LABELS,
    PARALLEL,
    UNDERDEVELOPMENT,
    PathwayClass,
    classify_pathway,
)
from .report import (
    AnalysisReport,
    PipelineConfig,
    PlotData,
    Provenance,
    ReportInputs,
    determinism_digest,
    emit_plot_data,
    emit_table,
    report_from_json,
    report_to_dict,
    report_to_json,
    run_pipeline,
    significance_stars,
)
from .series import (
    AlignedPair,
    FmtSeries,
    align,
    parse_fmt_csv,
    serialize_fmt_csv,
)
from .stats import (
    OlsCore,
    f_sf,
    ols_simple,
    regularized_incomplete_beta,
    t_cdf,
    t_quantile,
    t_two_sided_p,
)
from .synthetic import (
    SplitMix64,
    SyntheticSpec,
    early_phase_pair,
    generate_pair,
)

__all__ = [
    "__version__",
    "errors",
    # series
    "FmtSeries",
    "AlignedPair",
    "parse_fmt_csv",
    "serialize_fmt_csv",
    "align",
    # logistic
    "LogisticParams",
    "LogisticFit",
    "KSearchConfig",
    "logistic_value",
    "solve_time",
    "linearize",
    "fit_logistic",
    # stats
    "OlsCore",
    "ols_simple",
    "t_cdf",
    "t_two_sided_p",
    "t_quantile",
    "f_sf",
    "regularized_incomplete_beta",
    # coevolution
    "EvolutionFit",
    "RelationConstant",
    "estimate_evolution",
    "evolution_fit_from_summary",
    "predict_subsystem",
    "relation_constant",
    "check_relation",
    # pathway
    "PathwayClass",
    "classify_pathway",
    "UNDERDEVELOPMENT",
    "PARALLEL",
    "DEVELOPMENT",
    "INCONCLUSIVE",
    "LABELS",
    # synthetic
    "SyntheticSpec",
    "SplitMix64",
    "generate_pair",
    "early_phase_pair",
    # report
    "AnalysisReport",
    "PipelineConfig",
    "ReportInputs",
    "Provenance",
    "PlotData",
    "run_pipeline",
    "report_to_dict",
    "report_to_json",
    "report_from_json",
    "determinism_digest",
    "emit_table",
    "emit_plot_data",
    "significance_stars",
]
