#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "equiloc/geometry.hpp"

namespace equiloc {

// Parsed job-file value: a bare word, an exact rational, or a bracketed list.
class Value {
public:
    using List = std::vector<Value>;

    Value() = default;
    explicit Value(std::string w) : data_(std::move(w)) {}
    explicit Value(Rational q) : data_(std::move(q)) {}
    explicit Value(List l) : data_(std::move(l)) {}

    bool is_word() const { return std::holds_alternative<std::string>(data_); }
    bool is_rational() const { return std::holds_alternative<Rational>(data_); }
    bool is_list() const { return std::holds_alternative<List>(data_); }

    const std::string& word() const;
    const Rational& rational() const;
    long long integer() const;
    const List& list() const;

    IntVec int_vec() const;
    RatVec rat_vec() const;
    std::vector<IntVec> int_mat() const;
    std::vector<RatVec> rat_mat() const;

private:
    std::variant<std::string, Rational, List> data_;
};

// One space description, possibly with nested children (product/dual/restrict).
struct SpaceNode {
    std::string type;
    DelzantPolytope polytope;     // toric
    long long level = 1;          // toric
    std::string root_system;      // coadjoint
    IntVec lambda;                // coadjoint
    std::vector<IntVec> iota;     // restrict
    std::unique_ptr<SpaceNode> a, b;
};

struct JobSpec {
    std::unique_ptr<SpaceNode> space;
    std::string command;
    std::map<std::string, Value> params;

    bool has(const std::string& key) const { return params.count(key) > 0; }
    const Value& at(const std::string& key) const;
};

JobSpec parse_job_file(const std::string& path);
JobSpec parse_job_text(const std::string& text);

HamiltonianSpace build_space(const SpaceNode& node);

// Executes the job and writes its CSV output. Returns the process exit code
// (0 success, 2 validation failure). Computation errors propagate as
// equiloc::Error.
int run_job(const JobSpec& job);

} // namespace equiloc
