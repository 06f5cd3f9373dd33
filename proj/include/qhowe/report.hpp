#pragma once

// Suite reporting: a flat list of named pass/fail cases plus the parameters
// the suite ran with. Serialization to JSON lives in the harness; the check_*
// functions in the library only fill this structure.

#include <string>
#include <utility>
#include <vector>

namespace qhowe {

struct CaseResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params; // insertion-ordered
    std::vector<CaseResult> cases;

    void param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
    void add(std::string name, bool pass, std::string detail = "") {
        cases.push_back({std::move(name), pass, std::move(detail)});
    }
    // merge a sub-suite, prefixing its case names with "<suite>/"
    void absorb(const Report& sub) {
        for (const CaseResult& c : sub.cases)
            cases.push_back({sub.suite + "/" + c.name, c.pass, c.detail});
    }
    int failures() const {
        int n = 0;
        for (const CaseResult& c : cases)
            if (!c.pass) ++n;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

} // namespace qhowe
