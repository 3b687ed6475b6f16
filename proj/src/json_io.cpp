#include "exlie/json_io.hpp"

namespace exlie {

json rat_json(const Rat& r) { return rat_str(r); }

json scalar_json(const Scalar& s) {
    if (s.is_rational()) return rat_str(s.re);
    return json{{"re", rat_str(s.re)}, {"im", rat_str(s.im)}};
}

json octonion_json(const Octonion<Rat>& x) {
    json arr = json::array();
    for (int i = 0; i < 8; ++i) arr.push_back(rat_str(x.c[i]));
    return arr;
}

json albert_json(const AlbertElement<Rat>& a) {
    return json{{"d", rat_str(a.d)}, {"e", rat_str(a.e)}, {"f", rat_str(a.f)},
                {"x", octonion_json(a.x)}, {"y", octonion_json(a.y)},
                {"z", octonion_json(a.z)}};
}

json cubic_json(const BinaryCubic<Rat>& f) {
    return json::array({rat_str(f.a), rat_str(f.b), rat_str(f.c), rat_str(f.d)});
}

json packet_json(const std::vector<DiscreteSeriesDatum>& packet) {
    json arr = json::array();
    for (const auto& d : packet) {
        json hodge = json::array({d.hodge.first, d.hodge.second});
        arr.push_back(json{{"hc_param", d.hc_param},
                           {"min_k_type", d.min_k_type},
                           {"hodge_type", hodge},
                           {"chamber", d.chamber}});
    }
    return arr;
}

json suite_json(const SuiteResult& s) {
    json checks = json::array();
    for (const auto& c : s.checks) {
        json e{{"id", c.id}, {"claim", c.claim}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"suite", s.name}, {"pass", s.pass()}, {"checks", std::move(checks)}};
}

json report_json(const std::vector<SuiteResult>& suites) {
    bool all = true;
    json arr = json::array();
    for (const auto& s : suites) {
        all = all && s.pass();
        arr.push_back(suite_json(s));
    }
    return json{{"pass", all}, {"suites", std::move(arr)}};
}

}  // namespace exlie
