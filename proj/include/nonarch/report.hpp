#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nonarch {

struct Violation {
    std::string condition;
    std::string detail;
};

struct AuditReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void flag(std::string condition, std::string detail) {
        violations.push_back({std::move(condition), std::move(detail)});
    }
    void merge(const AuditReport& other) {
        checked += other.checked;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

}  // namespace nonarch
