#include "egonet/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace egonet {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool parse_bool(const std::string& value, const std::string& key) {
    const std::string v = lower(value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw IoError("config: invalid boolean for '" + key + "': " + value);
}

}  // namespace

AdjacencyMatrix load_edge_list(const std::string& path, bool one_based,
                               int n_override) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open edge list: " + path);
    }
    std::set<std::pair<int, int>> edges;
    int max_id = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::istringstream parts(stripped);
        long long a = 0, b = 0;
        if (!(parts >> a >> b)) {
            throw IoError(path + ":" + std::to_string(line_no) +
                          ": expected two integer node ids");
        }
        if (one_based) {
            --a;
            --b;
        }
        if (a < 0 || b < 0) {
            throw IoError(path + ":" + std::to_string(line_no) +
                          ": negative node id");
        }
        if (a == b) continue;  // self-loop
        max_id = std::max(max_id, static_cast<int>(std::max(a, b)));
        edges.emplace(std::min<int>(a, b), std::max<int>(a, b));
    }
    const int n = n_override > 0 ? n_override : max_id + 1;
    if (n < 1) {
        throw IoError(path + ": no edges and no node count override");
    }
    if (max_id >= n) {
        throw IoError(path + ": node id " + std::to_string(max_id) +
                      " exceeds node count " + std::to_string(n));
    }
    Matrix a = Matrix::Zero(n, n);
    for (const auto& [i, j] : edges) {
        a(i, j) = 1.0;
        a(j, i) = 1.0;
    }
    return AdjacencyMatrix(std::move(a));
}

void write_matrix(const Matrix& m, std::ostream& out) {
    out << m.rows() << ' ' << m.cols() << '\n';
    out.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

void write_matrix_file(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_matrix(m, out);
}

Matrix read_matrix(std::istream& in, const std::string& context) {
    Eigen::Index rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1) {
        throw IoError(context + ": bad matrix header");
    }
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!(in >> m(i, j))) {
                throw IoError(context + ": truncated matrix body");
            }
        }
    }
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix file: " + path);
    return read_matrix(in, path);
}

void write_ego_view(const EgoView& view, std::ostream& out) {
    out << view.n_total << ' ' << view.n_observed() << '\n';
    for (int i = 0; i < view.n_observed(); ++i) {
        if (i) out << ' ';
        out << view.observed[i];
    }
    out << '\n';
    write_matrix(view.a11, out);
    write_matrix(view.a12, out);
}

void write_ego_view_file(const EgoView& view, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    write_ego_view(view, out);
}

EgoView read_ego_view(std::istream& in, const std::string& context) {
    EgoView view;
    int n_obs = 0;
    if (!(in >> view.n_total >> n_obs) || n_obs < 1 || n_obs >= view.n_total) {
        throw IoError(context + ": bad ego view header");
    }
    view.observed.resize(n_obs);
    for (int& i : view.observed) {
        if (!(in >> i)) throw IoError(context + ": truncated observed index list");
    }
    view.a11 = read_matrix(in, context);
    view.a12 = read_matrix(in, context);
    if (view.a11.rows() != n_obs || view.a11.cols() != n_obs ||
        view.a12.rows() != n_obs ||
        view.a12.cols() != view.n_total - n_obs) {
        throw IoError(context + ": inconsistent ego view block shapes");
    }
    return view;
}

EgoView read_ego_view_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open ego view file: " + path);
    return read_ego_view(in, path);
}

namespace {

using KvSections = std::map<std::string, std::map<std::string, std::string>>;

KvSections parse_sections(const std::string& text, const std::string& context) {
    KvSections sections;
    std::istringstream in(text);
    std::string line;
    std::string current = "";
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']') {
                throw IoError(context + ":" + std::to_string(line_no) +
                              ": malformed section header");
            }
            current = lower(trim(s.substr(1, s.size() - 2)));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw IoError(context + ":" + std::to_string(line_no) +
                          ": expected key = value");
        }
        sections[current][lower(trim(s.substr(0, eq)))] = trim(s.substr(eq + 1));
    }
    return sections;
}

KvSections flatten_json(const std::string& text, const std::string& context) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(context + ": " + e.what());
    }
    KvSections sections;
    for (auto& [section, body] : j.items()) {
        if (!body.is_object()) {
            throw IoError(context + ": section '" + section + "' must be an object");
        }
        for (auto& [key, value] : body.items()) {
            std::string s;
            if (value.is_string()) {
                s = value.get<std::string>();
            } else {
                s = value.dump();
            }
            sections[lower(section)][lower(key)] = s;
        }
    }
    return sections;
}

ModelKind parse_kind(const std::string& s) {
    const std::string v = lower(s);
    if (v == "sbm") return ModelKind::sbm;
    if (v == "dcbm") return ModelKind::dcbm;
    if (v == "rdpg" || v == "product") return ModelKind::rdpg;
    if (v == "distance") return ModelKind::distance;
    throw IoError("config: unknown model kind: " + s);
}

Mechanism parse_mechanism(const std::string& s) {
    const std::string v = lower(s);
    if (v == "mcar") return Mechanism::mcar;
    if (v == "mnar_positive" || v == "mnar+") return Mechanism::mnar_positive;
    if (v == "mnar_negative" || v == "mnar-") return Mechanism::mnar_negative;
    throw IoError("config: unknown sampling mechanism: " + s);
}

std::vector<Estimator> parse_estimators(const std::string& s) {
    std::vector<Estimator> out;
    std::istringstream parts(s);
    std::string item;
    while (std::getline(parts, item, ',')) {
        const std::string v = lower(trim(item));
        if (v.empty()) continue;
        if (v == "le") {
            out.push_back(Estimator::le);
        } else if (v == "se") {
            out.push_back(Estimator::se);
        } else if (v == "le_plus" || v == "le+") {
            out.push_back(Estimator::le_plus);
        } else {
            throw IoError("config: unknown estimator: " + item);
        }
    }
    if (out.empty()) throw IoError("config: no estimator selected");
    return out;
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw IoError("config: invalid number for '" + key + "': " + v);
    }
}

int to_int(const std::string& v, const std::string& key) {
    const double x = to_double(v, key);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x) {
        throw IoError("config: expected integer for '" + key + "': " + v);
    }
    return i;
}

ExperimentConfig build_config(const KvSections& sections,
                              const std::string& context) {
    ExperimentConfig config;
    const auto model_it = sections.find("model");
    if (model_it != sections.end()) {
        const auto& m = model_it->second;
        const auto path_it = m.find("path");
        if (path_it != m.end()) {
            config.edge_list_path = path_it->second;
            for (const auto& [key, value] : m) {
                if (key == "path") continue;
                if (key == "one_based") {
                    config.one_based = parse_bool(value, key);
                } else if (key == "n_nodes") {
                    config.n_override = to_int(value, key);
                } else {
                    throw IoError(context + ": unknown edge-list model key: " + key);
                }
            }
        } else {
            ModelSpec spec;
            for (const auto& [key, value] : m) {
                if (key == "kind") spec.kind = parse_kind(value);
                else if (key == "n_nodes") spec.n_nodes = to_int(value, key);
                else if (key == "k") spec.k = to_int(value, key);
                else if (key == "b_within") spec.b_within = to_double(value, key);
                else if (key == "b_between") spec.b_between = to_double(value, key);
                else if (key == "out_in_ratio") spec.out_in_ratio = to_double(value, key);
                else if (key == "degree_power_alpha")
                    spec.degree_power_alpha = to_double(value, key);
                else if (key == "target_degree")
                    spec.target_degree = to_double(value, key);
                else throw IoError(context + ": unknown model key: " + key);
            }
            config.model = spec;
        }
    }

    const auto sampling_it = sections.find("sampling");
    if (sampling_it != sections.end()) {
        for (const auto& [key, value] : sampling_it->second) {
            if (key == "mechanism") {
                config.sampling.mechanism = parse_mechanism(value);
            } else if (key == "rho") {
                config.sampling.rho = to_double(value, key);
            } else {
                throw IoError(context + ": unknown sampling key: " + key);
            }
        }
        if (config.sampling.mechanism != Mechanism::mcar) {
            config.sampling.deltas = default_deltas(config.sampling.mechanism);
        }
    }

    const auto exp_it = sections.find("experiment");
    if (exp_it != sections.end()) {
        for (const auto& [key, value] : exp_it->second) {
            if (key == "estimators") config.estimators = parse_estimators(value);
            else if (key == "rank") {
                if (lower(value) == "cv") config.use_cv = true;
                else config.fixed_rank = to_int(value, key);
            } else if (key == "cv_max_rank") config.cv.max_rank = to_int(value, key);
            else if (key == "cv_holdout")
                config.cv.holdout_fraction = to_double(value, key);
            else if (key == "cv_repeats") config.cv.repeats = to_int(value, key);
            else if (key == "truncate") config.truncate = parse_bool(value, key);
            else if (key == "replications") config.replications = to_int(value, key);
            else if (key == "master_seed")
                config.master_seed = static_cast<std::uint64_t>(
                    std::stoull(value));
            else if (key == "output") config.output_path = value;
            else if (key == "threads") config.threads = to_int(value, key);
            else throw IoError(context + ": unknown experiment key: " + key);
        }
    }

    if (!config.model && config.edge_list_path.empty()) {
        throw IoError(context + ": config must name a model or an edge list");
    }
    return config;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& context) {
    const std::string stripped = trim(text);
    if (!stripped.empty() && stripped[0] == '{') {
        return build_config(flatten_json(text, context), context);
    }
    return build_config(parse_sections(text, context), context);
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

}  // namespace egonet
