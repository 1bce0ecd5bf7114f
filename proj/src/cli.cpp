#include "dt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dt/errors.hpp"
#include "dt/estimation.hpp"
#include "dt/gof.hpp"
#include "dt/models.hpp"
#include "dt/teissier.hpp"

namespace dt::cli {

namespace {

std::string fmt(double v, int prec) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::fixed << std::setprecision(prec) << v;
    return os.str();
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footnotes;
};

void render(const Table& t, Format format, std::ostream& out) {
    if (format == Format::Csv) {
        for (std::size_t j = 0; j < t.header.size(); ++j)
            out << t.header[j] << (j + 1 < t.header.size() ? "," : "\n");
        for (const auto& row : t.rows)
            for (std::size_t j = 0; j < row.size(); ++j)
                out << row[j] << (j + 1 < row.size() ? "," : "\n");
    } else {
        std::vector<std::size_t> width(t.header.size(), 0);
        for (std::size_t j = 0; j < t.header.size(); ++j) width[j] = t.header[j].size();
        for (const auto& row : t.rows)
            for (std::size_t j = 0; j < row.size() && j < width.size(); ++j)
                width[j] = std::max(width[j], row[j].size());

        auto line = [&](const std::vector<std::string>& cells) {
            out << "|";
            for (std::size_t j = 0; j < width.size(); ++j) {
                const std::string& c = j < cells.size() ? cells[j] : std::string();
                out << " " << c << std::string(width[j] - c.size(), ' ') << " |";
            }
            out << "\n";
        };
        line(t.header);
        out << "|";
        for (std::size_t j = 0; j < width.size(); ++j) out << std::string(width[j] + 2, '-') << "|";
        out << "\n";
        for (const auto& row : t.rows) line(row);
    }
    for (const auto& note : t.footnotes) out << note << "\n";
}

est::Dataset parse_file(const std::string& path, std::optional<double> scale_floor) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);

    std::vector<double> raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ls(line);
        std::string token;
        while (ls >> token) {
            std::size_t pos = 0;
            double value = 0.0;
            try {
                value = std::stod(token, &pos);
            } catch (const std::exception&) {
                throw ParseError("cannot parse '" + token + "' as a number", line_no);
            }
            if (pos != token.size())
                throw ParseError("cannot parse '" + token + "' as a number", line_no);
            if (value < 0.0) throw ParseError("negative value " + token, line_no);
            if (!scale_floor && std::floor(value) != value)
                throw ParseError("non-integer value " + token + " (use --scale-floor)", line_no);
            raw.push_back(value);
        }
    }
    if (raw.empty()) throw ParseError("no values found in " + path, line_no);

    if (scale_floor) return est::Dataset::from_raw(std::move(raw), *scale_floor);
    std::vector<std::int64_t> values;
    values.reserve(raw.size());
    for (double v : raw) values.push_back(static_cast<std::int64_t>(v));
    return est::Dataset::from_values(std::move(values));
}

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::vector<std::string> gof_cells(const gof::GofReport& rep, int prec) {
    return {fmt(rep.neg_ll, prec), fmt(rep.aic, prec),     fmt(rep.bic, prec),
            fmt(rep.caic, prec),   fmt(rep.ks_stat, prec), fmt(rep.ks_pvalue, prec)};
}

int run_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const est::Dataset data = ingest(config.data, config.scale_floor);

    std::vector<est::Method> methods;
    if (config.method == "mle")
        methods = {est::Method::MLE};
    else if (config.method == "mom")
        methods = {est::Method::MOM};
    else if (config.method == "both")
        methods = {est::Method::MLE, est::Method::MOM};
    else {
        err << "unknown method '" << config.method << "' (expected mle, mom or both)\n";
        return kExitParse;
    }

    Table t;
    t.header = {"Method", "Estimate", "SE", "-LL", "AIC", "BIC", "CAIC", "K-S", "P-value"};
    for (est::Method m : methods) {
        const est::FitResult fit = m == est::Method::MLE ? est::fit_mle(data) : est::fit_mom(data);
        if (fit.boundary()) {
            err << "degenerate data: all observations are zero; the likelihood increases toward "
                   "theta -> infinity (boundary)\n";
            return kExitDegenerate;
        }
        if (!fit.converged) {
            err << "fit did not converge\n";
            return kExitNoConvergence;
        }
        const DTParams p(fit.theta_hat);
        const gof::InfoCriteria ic = gof::information_criteria(-fit.log_likelihood, 1,
                                                               static_cast<int>(data.size()));
        const gof::KsResult ks =
            gof::ks_test(data, [&](std::int64_t y) { return dt::cdf(p, y); });
        const gof::GofReport rep = {-fit.log_likelihood, ic.aic,    ic.bic,
                                    ic.caic,             ks.stat,   ks.pvalue,
                                    1,                   static_cast<int>(data.size())};
        std::vector<std::string> row = {m == est::Method::MLE ? "MLE" : "MOM",
                                        fmt(fit.theta_hat, config.precision),
                                        fmt(fit.se, config.precision)};
        for (auto& c : gof_cells(rep, config.precision)) row.push_back(std::move(c));
        t.rows.push_back(std::move(row));
    }
    render(t, config.format, out);
    return kExitOk;
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const est::Dataset data = ingest(config.data, config.scale_floor);

    std::vector<std::string> names = config.models;
    if (names.empty())
        for (const auto& m : models::all_models()) names.push_back(m.name);
    for (const auto& n : names)
        if (!models::find_model(n)) {
            err << "unknown model '" << n << "'\n";
            return kExitParse;
        }

    const gof::ComparisonTable table = gof::compare_models(data, names);

    Table t;
    t.header = {"Model", "MLE(SE)", "-LL", "AIC", "BIC", "CAIC", "K-S", "P-value"};
    for (const auto& row : table.rows) {
        std::vector<std::string> cells = {row.model};
        if (row.failed()) {
            cells.push_back("FAILED: " + row.error);
            cells.insert(cells.end(), 6, "--");
        } else {
            std::string est_cell;
            for (std::size_t i = 0; i < row.fit.params.size(); ++i) {
                if (i) est_cell += ", ";
                est_cell += fmt(row.fit.params[i], config.precision) + " (" +
                            fmt(row.fit.ses[i], config.precision) + ")";
            }
            cells.push_back(std::move(est_cell));
            for (auto& c : gof_cells(row.report, config.precision)) cells.push_back(std::move(c));
        }
        t.rows.push_back(std::move(cells));
    }
    render(t, config.format, out);
    return kExitOk;
}

int run_describe(const RunConfig& config, std::ostream& out, std::ostream&) {
    Table t;
    t.header = {"theta", "mean", "variance", "skewness", "ex_kurtosis", "iod", "cv"};
    bool flagged = false;
    for (double theta : config.theta_grid) {
        const Descriptives d = descriptives(DTParams(theta));
        std::string label = fmt(theta, 3);
        if (theta < 1.05) {
            label += " *";
            flagged = true;
        }
        t.rows.push_back({label, fmt(d.mean, config.precision), fmt(d.variance, config.precision),
                          fmt(d.skewness, config.precision), fmt(d.ex_kurtosis, config.precision),
                          fmt(d.iod, config.precision), fmt(d.cv, config.precision)});
    }
    if (flagged)
        t.footnotes.push_back(
            "* theta < 1.05: long-tail row, evaluated by full-precision series summation");
    render(t, config.format, out);
    return kExitOk;
}

int run_ss(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<double>& grid1 = config.theta_grid;
    const std::vector<double>& grid2 = config.theta2_grid.empty() ? grid1 : config.theta2_grid;
    if (grid1.empty()) {
        err << "ss requires --theta-grid\n";
        return kExitParse;
    }
    Table t;
    t.header = {"theta1\\theta2"};
    for (double th2 : grid2) t.header.push_back(fmt(th2, 3));
    for (double th1 : grid1) {
        std::vector<std::string> row = {fmt(th1, 3)};
        for (double th2 : grid2)
            row.push_back(fmt(ss_reliability(DTParams(th1), DTParams(th2)), config.precision));
        t.rows.push_back(std::move(row));
    }
    render(t, config.format, out);
    return kExitOk;
}

int run_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!config.theta) {
        err << "sample requires --theta\n";
        return kExitParse;
    }
    OutputTarget target(config.out_path, out);
    const auto values = sample(DTParams(*config.theta), config.n, config.seed);
    for (auto v : values) target.get() << v << "\n";
    return kExitOk;
}

int run_emit_points(const RunConfig& config, std::ostream& out, std::ostream& err) {
    OutputTarget target(config.out_path, out);

    if (config.fn == "ll-profile") {
        const est::Dataset data = ingest(config.data, config.scale_floor);
        const est::FitResult fit = est::fit_mle(data);
        if (fit.boundary()) {
            err << "degenerate data: likelihood has no interior maximum\n";
            return kExitDegenerate;
        }
        const double half_width = 8.0 * (std::isfinite(fit.se) ? fit.se : 0.01);
        const double lo = std::max(fit.theta_hat - half_width, 1.0 + 0.01 * (fit.theta_hat - 1.0));
        const double hi = fit.theta_hat + half_width;
        const int points = 101;
        const int prec = std::max(config.precision, 6);
        for (int i = 0; i < points; ++i) {
            const double theta = lo + (hi - lo) * i / (points - 1);
            target.get() << fmt(theta, prec) << "," << fmt(est::log_likelihood(data, theta), prec)
                         << "\n";
        }
        return kExitOk;
    }

    if (!config.theta) {
        err << "emit-points --fn " << config.fn << " requires --theta\n";
        return kExitParse;
    }
    const DTParams p(*config.theta);
    double (*f)(const DTParams&, std::int64_t) = nullptr;
    if (config.fn == "pmf")
        f = pmf;
    else if (config.fn == "cdf")
        f = cdf;
    else if (config.fn == "hrf")
        f = hrf;
    else {
        err << "unknown function '" << config.fn << "' (expected pmf, cdf, hrf or ll-profile)\n";
        return kExitParse;
    }
    for (std::int64_t y = 0; y <= config.max_y; ++y)
        target.get() << y << "," << fmt(f(p, y), config.precision) << "\n";
    return kExitOk;
}

}  // namespace

est::Dataset ingest(const std::string& name_or_path, std::optional<double> scale_floor) {
    if (is_bundled(name_or_path)) {
        if (scale_floor)
            throw std::invalid_argument("--scale-floor cannot be combined with a bundled dataset");
        return bundled_dataset(name_or_path);
    }
    return parse_file(name_or_path, scale_floor);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::Fit: return run_fit(config, out, err);
            case Command::Compare: return run_compare(config, out, err);
            case Command::Describe: return run_describe(config, out, err);
            case Command::Ss: return run_ss(config, out, err);
            case Command::Sample: return run_sample(config, out, err);
            case Command::EmitPoints: return run_emit_points(config, out, err);
        }
        err << "unknown command\n";
        return kExitParse;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    } catch (const NonConvergenceError& e) {
        err << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

}  // namespace dt::cli
