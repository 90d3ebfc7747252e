#include "equiloc/jobfile.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "equiloc/quantize.hpp"

namespace equiloc {

namespace {

Error parse_error(int line, int col, const std::string& what) {
    return Error("ParseError", "line " + std::to_string(line) + " col " + std::to_string(col) +
                                   ": " + what);
}

} // namespace

const std::string& Value::word() const {
    if (!is_word()) throw invalid_parameter("expected a word value");
    return std::get<std::string>(data_);
}

const Rational& Value::rational() const {
    if (!is_rational()) throw invalid_parameter("expected a number");
    return std::get<Rational>(data_);
}

long long Value::integer() const {
    const Rational& q = rational();
    if (q.get_den() != 1) throw invalid_parameter("expected an integer");
    return static_cast<long long>(q.get_num().get_si());
}

const Value::List& Value::list() const {
    if (!is_list()) throw invalid_parameter("expected a bracketed list");
    return std::get<List>(data_);
}

IntVec Value::int_vec() const {
    IntVec v;
    for (const auto& e : list()) v.push_back(e.integer());
    return v;
}

RatVec Value::rat_vec() const {
    RatVec v;
    for (const auto& e : list()) v.push_back(e.rational());
    return v;
}

std::vector<IntVec> Value::int_mat() const {
    std::vector<IntVec> m;
    for (const auto& e : list()) m.push_back(e.int_vec());
    return m;
}

std::vector<RatVec> Value::rat_mat() const {
    std::vector<RatVec> m;
    for (const auto& e : list()) m.push_back(e.rat_vec());
    return m;
}

const Value& JobSpec::at(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw invalid_parameter("missing required parameter '" + key + "'");
    return it->second;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line;
    int col0; // column of s[0] in the original line

    int col() const { return col0 + static_cast<int>(pos); }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
};

Value parse_value(Cursor& c);

Value parse_list(Cursor& c) {
    ++c.pos; // '['
    Value::List items;
    while (true) {
        c.skip_ws();
        if (c.eof()) throw parse_error(c.line, c.col(), "unterminated list");
        if (c.peek() == ']') {
            ++c.pos;
            return Value(std::move(items));
        }
        if (!items.empty()) {
            if (c.peek() != ',')
                throw parse_error(c.line, c.col(), "expected ',' or ']' in list");
            ++c.pos;
            c.skip_ws();
        }
        items.push_back(parse_value(c));
    }
}

Value parse_value(Cursor& c) {
    c.skip_ws();
    if (c.eof()) throw parse_error(c.line, c.col(), "missing value");
    if (c.peek() == '[') return parse_list(c);
    size_t start = c.pos;
    while (!c.eof() && c.peek() != ',' && c.peek() != ']' &&
           !std::isspace(static_cast<unsigned char>(c.peek())))
        ++c.pos;
    std::string tok = c.s.substr(start, c.pos - start);
    if (tok.empty()) throw parse_error(c.line, c.col0 + static_cast<int>(start), "empty value");
    bool numeric = tok[0] == '-' || tok[0] == '+' || std::isdigit(static_cast<unsigned char>(tok[0]));
    if (numeric) {
        try {
            return Value(parse_rational(tok));
        } catch (const Error&) {
            throw parse_error(c.line, c.col0 + static_cast<int>(start),
                              "bad number '" + tok + "'");
        }
    }
    return Value(tok);
}

struct RawSection {
    std::map<std::string, Value> entries;
};

std::unique_ptr<SpaceNode> build_space_node(const std::map<std::string, RawSection>& sections,
                                            const std::string& path) {
    auto it = sections.find(path);
    if (it == sections.end()) return nullptr;
    const RawSection& sec = it->second;
    auto get = [&](const std::string& key) -> const Value& {
        auto e = sec.entries.find(key);
        if (e == sec.entries.end())
            throw invalid_parameter("section [" + path + "] is missing key '" + key + "'");
        return e->second;
    };

    auto node = std::make_unique<SpaceNode>();
    node->type = get("type").word();
    if (node->type == "toric") {
        node->polytope.vertices = get("vertices").rat_mat();
        if (node->polytope.vertices.empty())
            throw invalid_parameter("toric space without vertices");
        node->polytope.rank = static_cast<int>(node->polytope.vertices.front().size());
        for (const auto& e : get("edges").list()) node->polytope.vertex_edges.push_back(e.int_mat());
        node->level = sec.entries.count("level") ? get("level").integer() : 1;
    } else if (node->type == "coadjoint") {
        node->root_system = get("root_system").word();
        node->lambda = get("lambda").int_vec();
    } else if (node->type == "product") {
        node->a = build_space_node(sections, path + ".a");
        node->b = build_space_node(sections, path + ".b");
        if (!node->a || !node->b)
            throw invalid_parameter("product space needs [" + path + ".a] and [" + path + ".b]");
    } else if (node->type == "dual") {
        node->a = build_space_node(sections, path + ".a");
        if (!node->a) throw invalid_parameter("dual space needs [" + path + ".a]");
    } else if (node->type == "restrict") {
        node->a = build_space_node(sections, path + ".a");
        if (!node->a) throw invalid_parameter("restrict space needs [" + path + ".a]");
        node->iota = get("iota").int_mat();
    } else {
        throw invalid_parameter("unknown space type '" + node->type + "'");
    }
    return node;
}

} // namespace

JobSpec parse_job_text(const std::string& text) {
    std::map<std::string, RawSection> sections;
    std::string current;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        size_t last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        if (line.front() == '[') {
            if (line.back() != ']')
                throw parse_error(lineno, static_cast<int>(first) + 1, "unterminated section header");
            current = line.substr(1, line.size() - 2);
            if (current.empty())
                throw parse_error(lineno, static_cast<int>(first) + 2, "empty section name");
            sections[current];
            continue;
        }
        if (current.empty())
            throw parse_error(lineno, static_cast<int>(first) + 1, "entry before any section header");
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(lineno, static_cast<int>(first) + 1, "expected 'key = value'");
        std::string key = line.substr(0, eq);
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key.empty())
            throw parse_error(lineno, static_cast<int>(first) + 1, "empty key");
        std::string valstr = line.substr(eq + 1);
        Cursor c{valstr, 0, lineno, static_cast<int>(first + eq + 2)};
        Value v = parse_value(c);
        c.skip_ws();
        if (!c.eof()) throw parse_error(lineno, c.col(), "trailing characters after value");
        sections[current].entries.emplace(std::move(key), std::move(v));
    }

    JobSpec job;
    job.space = build_space_node(sections, "space");
    auto cmd = sections.find("command");
    if (cmd == sections.end()) throw parse_error(lineno, 1, "missing [command] section");
    auto name = cmd->second.entries.find("name");
    if (name == cmd->second.entries.end())
        throw parse_error(lineno, 1, "[command] section has no 'name'");
    job.command = name->second.word();
    job.params = cmd->second.entries;
    job.params.erase("name");
    return job;
}

JobSpec parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open job file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_job_text(buf.str());
}

HamiltonianSpace build_space(const SpaceNode& node) {
    if (node.type == "toric") return build_toric(node.polytope, node.level);
    if (node.type == "coadjoint")
        return build_coadjoint(build_root_system(node.root_system), node.lambda);
    if (node.type == "product") return product(build_space(*node.a), build_space(*node.b));
    if (node.type == "dual") return dualize(build_space(*node.a));
    if (node.type == "restrict") return restrict_subtorus(build_space(*node.a), node.iota);
    throw invalid_parameter("unknown space type '" + node.type + "'");
}

namespace {

struct CsvWriter {
    std::ostringstream out;

    void row(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
            if (!quote) {
                out << cells[i];
            } else {
                out << '"';
                for (char ch : cells[i]) {
                    if (ch == '"') out << '"';
                    out << ch;
                }
                out << '"';
            }
        }
        out << '\n';
    }
};

std::string vec_str(const IntVec& v) { return to_string(v); }
std::string vec_str(const RatVec& v) { return to_string(v); }

Box window_from(const JobSpec& job, int rank) {
    auto m = job.at("window").rat_mat();
    if (m.size() != 2 || static_cast<int>(m[0].size()) != rank)
        throw invalid_parameter("window must be [[lo...],[hi...]] of the space rank");
    Box b;
    for (const auto& c : m[0]) {
        if (c.get_den() != 1) throw invalid_parameter("window bounds must be integers");
        b.lo.push_back(c.get_num().get_si());
    }
    for (const auto& c : m[1]) {
        if (c.get_den() != 1) throw invalid_parameter("window bounds must be integers");
        b.hi.push_back(c.get_num().get_si());
    }
    return b;
}

std::vector<IntVec> bundle_from(const JobSpec& job, const HamiltonianSpace& space) {
    const Value& v = job.at("bundle");
    std::vector<IntVec> bundle;
    if (v.is_word()) {
        long long k = job.has("k") ? job.at("k").integer() : 1;
        for (const auto& p : space.points) {
            if (v.word() == "prequantum") {
                IntVec w = p.bundle_weight;
                for (auto& c : w) c *= k;
                bundle.push_back(w);
            } else if (v.word() == "trivial") {
                bundle.push_back(IntVec(space.rank, 0));
            } else {
                throw invalid_parameter("bundle must be prequantum, trivial, or a weight matrix");
            }
        }
        return bundle;
    }
    bundle = v.int_mat();
    return bundle;
}

int execute(const JobSpec& job, CsvWriter& csv) {
    const std::string& cmd = job.command;

    if (cmd == "blattner") {
        auto res = blattner_sl2(job.at("lambda_hc").integer(), job.at("steps").integer());
        csv.row({"mu", "blattner", "reduced", "agree"});
        const Box& w = *res.blattner.window();
        for (long long mu = w.lo[0]; mu <= w.hi[0]; ++mu) {
            Int b = res.blattner.multiplicity({mu});
            Int r = res.reduced_count.multiplicity({mu});
            csv.row({std::to_string(mu), b.get_str(), r.get_str(), b == r ? "true" : "false"});
        }
        return 0;
    }
    if (cmd == "qr-spinc") {
        RootSystem rs = build_root_system(job.at("root_system").word());
        Box window = window_from(job, rs.rank);
        QRReport report = qr_report_spinc_flag(rs, window);
        csv.row({"mu", "from_character", "from_reduction", "agree"});
        for (const auto& r : report.rows)
            csv.row({vec_str(r.mu), r.from_character.get_str(), r.from_reduction.get_str(),
                     r.agree ? "true" : "false"});
        return 0;
    }

    if (!job.space) throw invalid_parameter("command '" + cmd + "' needs a [space] section");
    HamiltonianSpace space = build_space(*job.space);

    if (cmd == "validate") {
        ValidationReport report = validate(space);
        csv.row({"check", "pass", "witness"});
        for (const auto& c : report.checks)
            csv.row({c.name, c.pass ? "true" : "false", c.witness});
        return report.all_pass() ? 0 : 2;
    }
    if (cmd == "volume") {
        csv.row({"volume"});
        csv.row({to_string(symplectic_volume(space))});
        return 0;
    }
    if (cmd == "abbv") {
        bool exponential = job.has("exponential") && job.at("exponential").word() == "true";
        if (!exponential) {
            MultiPoly p = abbv_integrate_polynomial(space, EquivariantClass::one(space, false));
            csv.row({"polynomial"});
            csv.row({p.to_string()});
        } else {
            auto terms = abbv_integrate_exponential(space, EquivariantClass::one(space, true));
            csv.row({"exponent", "coefficient"});
            for (const auto& t : terms) csv.row({vec_str(t.exponent), t.coeff.to_string()});
        }
        return 0;
    }
    if (cmd == "dh") {
        IntVec beta = job.has("beta") ? job.at("beta").int_vec() : generic_polarization(space);
        PiecewisePolyMeasure m = dh_measure(space, beta);
        csv.row({"kind", "data1", "data2", "data3"});
        for (const auto& w : m.walls)
            csv.row({"wall", vec_str(w.normal), to_string(w.offset), w.spurious ? "spurious" : "real"});
        for (const auto& ch : m.chambers)
            csv.row({"chamber", vec_str(ch.sample), ch.density.to_string(), ""});
        csv.row({"mass", to_string(m.total_mass), "", ""});
        return 0;
    }
    if (cmd == "density") {
        IntVec beta = job.has("beta") ? job.at("beta").int_vec() : generic_polarization(space);
        PiecewisePolyMeasure m = dh_measure(space, beta);
        csv.row({"xi", "density"});
        for (const auto& pt : job.at("points").rat_mat())
            csv.row({vec_str(pt), to_string(m.density_at(pt))});
        return 0;
    }
    if (cmd == "jump") {
        Rational a = job.at("wall").rational();
        int dir = job.has("direction") ? static_cast<int>(job.at("direction").integer()) : 1;
        MultiPoly j = wall_jump(space, a, dir);
        csv.row({"wall", "jump"});
        csv.row({to_string(a), j.to_string()});
        return 0;
    }
    if (cmd == "martin") {
        csv.row({"reduced_integral"});
        csv.row({to_string(nonabelian_reduced_integral(space))});
        return 0;
    }
    if (cmd == "quantize") {
        long long k = job.has("k") ? job.at("k").integer() : 1;
        Character chi;
        if (job.has("window")) {
            Box window = window_from(job, space.rank);
            IntVec beta = job.has("beta") ? job.at("beta").int_vec() : generic_polarization(space);
            chi = rr_character(space, k, beta, window);
        } else {
            chi = rr_character_auto(space, k);
        }
        csv.row({"weight", "multiplicity"});
        for (const auto& [w, m] : chi.multiplicities()) csv.row({vec_str(w), m.get_str()});
        return 0;
    }
    if (cmd == "multiplicities") {
        long long k = job.has("k") ? job.at("k").integer() : 1;
        csv.row({"highest_weight", "multiplicity"});
        for (const auto& [lam, m] : k_multiplicities(space, k))
            csv.row({vec_str(lam), m.get_str()});
        return 0;
    }
    if (cmd == "qr-toric") {
        if (!job.space || job.space->type != "toric")
            throw invalid_parameter("qr-toric needs a toric [space]");
        QRReport report = qr_report_toric(job.space->polytope, job.space->level);
        csv.row({"mu", "from_character", "from_reduction", "agree"});
        for (const auto& r : report.rows)
            csv.row({vec_str(r.mu), r.from_character.get_str(), r.from_reduction.get_str(),
                     r.agree ? "true" : "false"});
        return 0;
    }
    if (cmd == "positivity") {
        csv.row({"classification"});
        csv.row({to_string(phi_positivity(space, bundle_from(job, space)))});
        return 0;
    }
    throw invalid_parameter("unknown command '" + cmd + "'");
}

} // namespace

int run_job(const JobSpec& job) {
    CsvWriter csv;
    int code = execute(job, csv);
    if (job.has("output")) {
        std::ofstream out(job.at("output").word(), std::ios::binary);
        if (!out) throw invalid_parameter("cannot open output file");
        out << csv.out.str();
    } else {
        std::cout << csv.out.str();
    }
    return code;
}

} // namespace equiloc
