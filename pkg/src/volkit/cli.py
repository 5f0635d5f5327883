"""Command-line interface.

One subcommand per operation: series utilities (returns, mvol, garch, adf,
describe), panel analyses driven by a dataset config (ingest, corr, pca,
regress, johansen, granger, white), the closed-form calculators
(``theory <calc>``), the full pipeline, and the dataset simulator.

Exit codes: 0 success, 1 usage or configuration error, 2 data error,
3 numerical failure.
"""

import argparse
import sys

from . import theory
from .errors import (
    AlignmentError,
    ConfigurationError,
    DegenerateInputError,
    DimensionError,
    DomainError,
    IngestionError,
    InsufficientDataError,
    NumericalError,
    ParameterError,
    SingularDesignError,
    VolkitError,
)
from .ingest import SeriesSpec, read_series, write_panel_csv, write_series_csv
from .pipeline import (
    SCENARIOS,
    emit_report,
    load_pipeline_config,
    render_text,
    run_pipeline,
    simulate_dataset,
)
from .series import describe as describe_series
from .series import log_returns
from .stattests import adf_test
from .volatility import garch_fit, garch_volatility, monthly_volatility

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3

_DATA_ERRORS = (IngestionError, AlignmentError, InsufficientDataError,
                DegenerateInputError, DomainError, DimensionError)
_USAGE_ERRORS = (ConfigurationError, ParameterError)
_NUMERICAL_ERRORS = (NumericalError, SingularDesignError)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except _NUMERICAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except VolkitError as exc:
        cause = getattr(exc, "cause", None)
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(cause, _USAGE_ERRORS):
            return EXIT_USAGE
        if isinstance(cause, _NUMERICAL_ERRORS):
            return EXIT_NUMERICAL
        return EXIT_DATA


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="volkit",
        description="Volatility construction and time-series econometrics "
                    "on aligned daily panels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def series_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="CSV file with date,value columns")
        p.add_argument("--date-column", default="date")
        p.add_argument("--value-column", default="value")
        return p

    p = series_cmd("returns", "log returns of a price series")
    p.add_argument("--out", help="write the returns as CSV here")
    p.set_defaults(handler=_cmd_returns)

    p = series_cmd("mvol", "monthly realized volatility of a return series")
    p.add_argument("--out", help="write the monthly series as CSV here")
    p.set_defaults(handler=_cmd_mvol)

    p = series_cmd("garch", "fit a GARCH(1,1) to a return series")
    p.add_argument("--out", help="write the daily conditional volatility CSV here")
    p.set_defaults(handler=_cmd_garch)

    p = series_cmd("adf", "augmented Dickey-Fuller unit-root test")
    p.add_argument("--spec", default="constant+trend",
                   choices=["none", "constant", "constant+trend"])
    p.add_argument("--lags", default="auto",
                   help="lagged differences, or 'auto' for AIC selection")
    p.set_defaults(handler=_cmd_adf)

    p = sub.add_parser("describe", help="descriptive statistics of one series "
                                        "or of the whole configured panel")
    p.add_argument("file", nargs="?", help="CSV file with date,value columns")
    p.add_argument("--date-column", default="date")
    p.add_argument("--value-column", default="value")
    p.add_argument("--config", help="describe every panel variable instead")
    p.set_defaults(handler=_cmd_describe)

    def config_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="dataset/pipeline config file")
        return p

    p = config_cmd("ingest", "read, align, validate, and export the panel")
    p.add_argument("--out", required=True, help="panel CSV destination")
    p.set_defaults(handler=_cmd_ingest)

    for name, stage, help_text in (
        ("corr", "correlation", "correlation matrix and multicollinearity screen"),
        ("pca", "pca", "principal component analysis of the lagged variable set"),
        ("regress", "regression", "volatility regression on components"),
        ("johansen", "johansen", "Johansen cointegration test"),
        ("granger", "granger", "Granger causality battery"),
        ("white", "white", "White heteroskedasticity test"),
    ):
        p = config_cmd(name, help_text)
        p.set_defaults(handler=_make_stage_handler(stage))

    p = config_cmd("pipeline", "run the full workflow and emit the report")
    p.add_argument("--out", required=True, help="report output directory")
    p.add_argument("--format", default="json", choices=["text", "csv", "json"])
    p.add_argument("--no-figures", action="store_true",
                   help="skip PNG rendering on the csv path")
    p.set_defaults(handler=_cmd_pipeline)

    p = sub.add_parser("simulate", help="generate a synthetic dataset")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=1500)
    p.add_argument("--scenario", default="paper-like", choices=list(SCENARIOS))
    p.add_argument("--out", required=True, help="dataset directory")
    p.set_defaults(handler=_cmd_simulate)

    _add_theory_commands(sub)
    return parser


def _read_cli_series(args):
    return read_series(SeriesSpec(
        role="SERIES", path=args.file,
        date_column=args.date_column, value_column=args.value_column,
    ))


def _print_series(s, header):
    print(f"date,{header}")
    for d, v in zip(s.dates, s.values):
        print(f"{d},{v:.10g}")


def _cmd_returns(args):
    out = log_returns(_read_cli_series(args))
    if args.out:
        write_series_csv(out, args.out, value_header="return")
        print(f"wrote {len(out)} returns to {args.out}")
    else:
        _print_series(out, "return")
    return EXIT_OK


def _cmd_mvol(args):
    out = monthly_volatility(_read_cli_series(args))
    if args.out:
        write_series_csv(out, args.out, value_header="mvol")
        print(f"wrote {len(out)} monthly volatilities to {args.out}")
    else:
        _print_series(out, "mvol")
    return EXIT_OK


def _cmd_garch(args):
    fit = garch_fit(_read_cli_series(args))
    p = fit.params
    print(f"mu     = {p.mu:.10g}")
    print(f"omega  = {p.omega:.10g}")
    print(f"alpha  = {p.alpha:.10g}")
    print(f"beta   = {p.beta:.10g}")
    print(f"log-likelihood = {fit.log_likelihood:.10g}")
    print(f"converged = {fit.converged} (iterations {fit.iterations})")
    if args.out:
        write_series_csv(garch_volatility(fit), args.out, value_header="vol")
        print(f"wrote daily volatility to {args.out}")
    return EXIT_OK


def _cmd_adf(args):
    lags = None if args.lags == "auto" else int(args.lags)
    res = adf_test(_read_cli_series(args), spec=args.spec, lags=lags)
    print(f"ADF statistic  {res.statistic:.4f}")
    print(f"1% Threshold   {res.critical_1pct:.4f}")
    print(f"5% Threshold   {res.critical_5pct:.4f}")
    print(f"10% Threshold  {res.critical_10pct:.4f}")
    print(f"P-value        {res.p_value:.4f}")
    print(f"lags           {res.lags_used}")
    print(f"Stationarity   {res.decision}")
    return EXIT_OK


def _cmd_describe(args):
    if args.config:
        config = load_pipeline_config(args.config)
        bundle = run_pipeline(config)
        print(_extract_section(render_text(bundle), "DESCRIPTIVE"))
        return EXIT_OK
    if not args.file:
        raise ConfigurationError("describe needs a CSV file or --config")
    st = describe_series(_read_cli_series(args))
    print("N         ", st.n)
    print(f"Mean       {st.mean:.4f}")
    print(f"SD         {st.sd:.4f}")
    print(f"Skewness   {st.skewness:.4f}")
    print(f"Kurtosis   {st.kurtosis_excess:.4f} (excess; raw {st.kurtosis:.4f})")
    print(f"Min        {st.min:.4f}")
    print(f"Max        {st.max:.4f}")
    return EXIT_OK


def _cmd_ingest(args):
    from .ingest import align_panel, validate_panel

    config = load_pipeline_config(args.config)
    series = [(s.role, read_series(s)) for s in config.series_specs]
    panel = align_panel(series, policy=config.alignment,
                        max_gap_days=config.max_gap_days)
    report = validate_panel(panel)
    write_panel_csv(panel, args.out)
    print(f"wrote {len(panel)} aligned observations x {len(panel.roles)} "
          f"columns to {args.out}")
    for issue in report.issues:
        print(f"{issue.severity}: {issue.role} {issue.message}")
    return EXIT_OK if report.ok else EXIT_DATA


def _make_stage_handler(stage):
    def handler(args):
        config = load_pipeline_config(args.config)
        bundle = run_pipeline(config)
        text = render_text(bundle)
        section = _extract_section(text, stage.upper())
        print(section)
        return EXIT_OK

    return handler


def _extract_section(text, title):
    lines = text.splitlines()
    try:
        start = lines.index(title)
    except ValueError:
        return text
    end = start + 1
    while end < len(lines) and lines[end].strip():
        end += 1
    return "\n".join(lines[start:end])


def _cmd_pipeline(args):
    config = load_pipeline_config(args.config)
    bundle = run_pipeline(config)
    written = emit_report(bundle, args.format, args.out,
                          figures=not args.no_figures)
    for path in written:
        print(f"wrote {path}")
    missing = [s for s in bundle.stages.values() if s.status == "skipped"]
    if missing:
        print(f"({len(missing)} stage(s) skipped; see the report for reasons)")
    return EXIT_OK


def _cmd_simulate(args):
    written = simulate_dataset(args.seed, args.n, args.scenario, args.out)
    for role, path in written.items():
        print(f"wrote {role}: {path}")
    return EXIT_OK


# ---------------------------------------------------------------- theory CLI

def _add_theory_commands(sub):
    p = sub.add_parser("theory", help="closed-form finance calculators")
    tsub = p.add_subparsers(dest="calc", required=True)

    pv = tsub.add_parser("pv", help="present value of dividends plus terminal value")
    pv.add_argument("--dividends", required=True,
                    help="comma-separated per-period dividends")
    pv.add_argument("--terminal", type=float, default=0.0)
    pv.add_argument("--rate", type=float, required=True)
    pv.set_defaults(handler=_theory_pv)

    pp = tsub.add_parser("perpetuity", help="constant-dividend perpetuity value")
    pp.add_argument("--dividend", type=float, required=True)
    pp.add_argument("--rate", type=float, required=True)
    pp.set_defaults(handler=_theory_perpetuity)

    cb = tsub.add_parser("capm-beta", help="systematic-risk loading")
    cb.add_argument("--sigma-i", type=float, required=True)
    cb.add_argument("--sigma-m", type=float, required=True)
    cb.add_argument("--rho", type=float, required=True)
    cb.set_defaults(handler=_theory_capm_beta)

    cr = tsub.add_parser("capm-return", help="expected return from beta")
    cr.add_argument("--beta", type=float, required=True)
    cr.add_argument("--risk-free", type=float, required=True)
    cr.add_argument("--expected-market", type=float, required=True)
    cr.set_defaults(handler=_theory_capm_return)

    ia = tsub.add_parser("ia", help="inflation on the adjustment curve")
    ia.add_argument("--core", type=float, required=True)
    ia.add_argument("--slope", type=float, required=True,
                    help="inflation response to the output gap")
    ia.add_argument("--output", type=float, required=True)
    ia.add_argument("--natural", type=float, required=True)
    ia.set_defaults(handler=_theory_ia)

    fx = tsub.add_parser("fx-sensitivity",
                         help="stock-price response to the real exchange rate")
    fx.add_argument("--phi-s", type=float, required=True)
    fx.add_argument("--phi-y", type=float, required=True)
    fx.add_argument("--phi-q", type=float, required=True)
    fx.add_argument("--l-s", type=float, required=True)
    fx.add_argument("--l-y", type=float, required=True)
    fx.set_defaults(handler=_theory_fx)


def _theory_pv(args):
    dividends = tuple(float(tok) for tok in args.dividends.split(",") if tok.strip())
    value = theory.present_value(theory.CashflowSchedule(
        dividends=dividends, terminal_value=args.terminal, discount_rate=args.rate))
    print(f"present_value = {value:.10g}")
    return EXIT_OK


def _theory_perpetuity(args):
    value = theory.perpetuity_value(args.dividend, args.rate)
    print(f"perpetuity_value = {value:.10g}")
    return EXIT_OK


def _theory_capm_beta(args):
    value = theory.capm_beta(theory.CapmInputs(
        sigma_i=args.sigma_i, sigma_m=args.sigma_m, rho_im=args.rho))
    print(f"beta = {value:.10g}")
    return EXIT_OK


def _theory_capm_return(args):
    inputs = theory.CapmInputs(sigma_i=1.0, sigma_m=1.0, rho_im=0.0,
                               risk_free=args.risk_free,
                               expected_market=args.expected_market)
    value = theory.capm_expected_return(args.beta, inputs)
    print(f"expected_return = {value:.10g}")
    return EXIT_OK


def _theory_ia(args):
    value = theory.ia_inflation(theory.IaCurveInputs(
        core_inflation=args.core, lambda_=args.slope,
        output=args.output, natural_output=args.natural))
    print(f"inflation = {value:.10g}")
    return EXIT_OK


def _theory_fx(args):
    value = theory.stock_price_fx_sensitivity(theory.IsLmIaPartials(
        phi_s=args.phi_s, phi_y=args.phi_y, phi_q=args.phi_q,
        l_s=args.l_s, l_y=args.l_y))
    print(f"dS_dq = {value:.10g}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
