#include "liar/serialization.hpp"

#include "liar/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace liar {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_number(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

template <class F>
auto parse_guarded(const std::string& what, F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, what + ": " + e.what());
    }
}

} // namespace

std::string config_to_json(const Configuration& config) {
    ordered_json j;
    j["m"] = config.m;
    j["referent"] = config.referent;
    j["negating"] = config.negating;
    return j.dump();
}

Configuration config_from_json(const std::string& text) {
    Configuration config = parse_guarded("configuration", [&] {
        const auto j = ordered_json::parse(text);
        Configuration c;
        c.m = j.at("m").get<int>();
        c.referent = j.at("referent").get<std::vector<int>>();
        c.negating = j.at("negating").get<std::vector<bool>>();
        return c;
    });
    return validate(std::move(config));
}

std::string cycle_to_json(const ReasoningCycle& cycle) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : cycle.steps) {
        ordered_json step;
        step["step"] = s.step;
        step["sentence"] = s.sentence;
        step["value"] = std::string(1, to_char(s.value));
        arr.push_back(std::move(step));
    }
    return arr.dump();
}

std::string state_to_json(const SparseState& state, int indent) {
    ordered_json j;
    j["m"] = state.m();
    j["n"] = state.n();
    ordered_json terms = ordered_json::array();
    for (const auto& t : state.terms()) {
        ordered_json term;
        term["tuple"] = t.index.entries();
        term["embedded"] = kappa(t.index, state.n()).to_string();
        term["re"] = t.amplitude.real();
        term["im"] = t.amplitude.imag();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

SparseState state_from_json(const std::string& text) {
    return parse_guarded("state", [&] {
        const auto j = ordered_json::parse(text);
        SparseState state(j.at("m").get<int>(), j.at("n").get<int>());
        for (const auto& term : j.at("terms")) {
            TensorIndex idx(term.at("tuple").get<std::vector<int>>());
            if (idx.m() != state.m()) {
                throw Error(ErrorKind::ParseError, "tuple " + idx.to_string() + " has wrong length");
            }
            const std::string embedded = term.at("embedded").get<std::string>();
            if (kappa(idx, state.n()).to_string() != embedded) {
                throw Error(ErrorKind::ParseError, "embedded index " + embedded + " does not match tuple " +
                                                       idx.to_string());
            }
            state.add(idx, {term.at("re").get<double>(), term.at("im").get<double>()});
        }
        return state;
    });
}

int trace_precision() {
    if (const char* env = std::getenv("LIARSIM_PRECISION")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value >= 1 && value <= 17) {
            return static_cast<int>(value);
        }
    }
    return 12;
}

void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows,
                     std::span<const std::pair<std::string, std::string>> comments, int precision) {
    for (const auto& [key, value] : comments) {
        out << "# " << key << '=' << value << '\n';
    }
    out << "t,sentence,p_true,p_false\n";
    for (const auto& r : rows) {
        out << format_number(r.t, precision) << ',' << r.sentence << ',' << format_number(r.p_true, precision) << ','
            << format_number(r.p_false, precision) << '\n';
    }
}

void write_trace_json(std::ostream& out, std::span<const TraceRow> rows, int precision) {
    // Numbers are emitted with the trace precision rather than nlohmann's round-trip form.
    out << '[';
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        out << (k ? ",\n " : "\n ") << "{\"t\":" << format_number(r.t, precision) << ",\"sentence\":" << r.sentence
            << ",\"p_true\":" << format_number(r.p_true, precision)
            << ",\"p_false\":" << format_number(r.p_false, precision) << '}';
    }
    out << (rows.empty() ? "]\n" : "\n]\n");
}

std::string gnuplot_script(const std::string& csv_path, std::span<const int> sentences, double time_scale) {
    std::ostringstream s;
    s << "set datafile separator ','\n"
      << "set datafile commentschars '#'\n"
      << "set key autotitle columnhead outside right\n"
      << "set xlabel 't (one reasoning step = " << format_number(time_scale, 12) << ")'\n"
      << "set ylabel 'probability'\n"
      << "set yrange [-0.05:1.05]\n"
      << "plot ";
    for (std::size_t k = 0; k < sentences.size(); ++k) {
        const int i = sentences[k];
        s << (k ? ", \\\n     " : "") << "'" << csv_path << "' using 1:($2==" << i
          << " ? $3 : 1/0) with lines title '" << i << ".T', \\\n     '" << csv_path << "' using 1:($2==" << i
          << " ? $4 : 1/0) with lines dashtype 2 title '" << i << ".F'";
    }
    s << "\n";
    return s.str();
}

} // namespace liar
