#ifndef BRILL_GOLDEN_HPP
#define BRILL_GOLDEN_HPP

#include "brill/json_io.hpp"
#include "brill/pairing.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace brill {

/// One golden fixture: `<name>.in.json` names an operation and its inputs,
/// `<name>.out.json` holds the expected value. Comparison is on parsed
/// elements, so formatting and term order in the fixture do not matter.
struct GoldenResult {
    std::string name;
    bool passed = false;
    std::string message;
};

namespace detail {
inline json load_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    json j;
    in >> j;
    return j;
}

inline json girard_to_json(const std::vector<GirardTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms)
        out.push_back({{"c", rat_to_string(t.coefficient)}, {"i", t.multidegrees}});
    return out;
}

inline bool girard_equal(const json& a, const json& b) {
    auto key = [](const json& t) { return std::make_pair(t.at("i").get<std::vector<int>>(),
                                                          rat_from_string(t.at("c").get<std::string>())); };
    std::vector<std::pair<std::vector<int>, Rational>> xs, ys;
    for (const auto& t : a) xs.push_back(key(t));
    for (const auto& t : b) ys.push_back(key(t));
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return xs == ys;
}
} // namespace detail

inline GoldenResult run_golden_case(const std::filesystem::path& in_path,
                                    const std::filesystem::path& out_path) {
    GoldenResult res{in_path.stem().stem().string(), false, ""};
    try {
        json in = detail::load_json(in_path);
        json expected = detail::load_json(out_path);
        const std::string op = in.at("op").get<std::string>();

        if (op == "girard") {
            auto got = detail::girard_to_json(girard_terms(in.at("k").get<int>(), in.at("d").get<int>()));
            res.passed = detail::girard_equal(got, expected);
            if (!res.passed) res.message = "girard mismatch: got " + got.dump();
        } else if (op == "e_map") {
            auto got = e_map(sym_from_json(in.at("f")), in.at("j").get<int>());
            res.passed = got == tens2_from_json(expected);
            if (!res.passed) res.message = "got " + to_json(got).dump();
        } else if (op == "q_map") {
            auto got = q_map(sym_from_json(in.at("f")), in.at("d").get<int>());
            res.passed = got == tens2_from_json(expected);
            if (!res.passed) res.message = "got " + to_json(got).dump();
        } else if (op == "polarize") {
            auto got = polarize_element(sym_from_json(in.at("f")), in.at("j").get<int>());
            res.passed = got == tens2_from_json(expected);
            if (!res.passed) res.message = "got " + to_json(got).dump();
        } else if (op == "pi_dd") {
            auto got = pi_dd(tens2_from_json(in.at("t")));
            res.passed = got == curly_from_json(expected);
            if (!res.passed) res.message = "got " + to_json(got).dump();
        } else if (op == "qbar") {
            std::vector<SymElement<Rational>> fs;
            for (const auto& f : in.at("fs")) fs.push_back(sym_from_json(f));
            auto got = qbar(fs);
            res.passed = got == tens2_from_json(expected);
            if (!res.passed) res.message = "got " + to_json(got).dump();
        } else if (op == "bbar") {
            std::vector<SymElement<Rational>> fs;
            for (const auto& f : in.at("fs")) fs.push_back(sym_from_json(f));
            auto got = bbar(fs);
            res.passed = got == curly_from_json(expected);
            if (!res.passed) res.message = "got " + to_json(got).dump();
        } else {
            res.message = "unknown op '" + op + "'";
        }
    } catch (const std::exception& e) {
        res.passed = false;
        res.message = e.what();
    }
    return res;
}

/// Runs every `*.in.json` / `*.out.json` pair in the directory, sorted by
/// name.
inline std::vector<GoldenResult> run_golden_dir(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> ins;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        auto p = entry.path();
        if (p.string().ends_with(".in.json")) ins.push_back(p);
    }
    std::sort(ins.begin(), ins.end());
    std::vector<GoldenResult> out;
    for (const auto& in : ins) {
        std::string base = in.string();
        base.resize(base.size() - std::string(".in.json").size());
        out.push_back(run_golden_case(in, base + ".out.json"));
    }
    return out;
}

} // namespace brill

#endif
