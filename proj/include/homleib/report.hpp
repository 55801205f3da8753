#pragma once

#include <string>
#include <vector>

namespace homleib {

struct CheckItem {
    std::string name;
    bool passed = true;
    std::string witness; // first violating tuple and its defect, if any
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool passed() const {
        for (const auto &it : items)
            if (!it.passed)
                return false;
        return true;
    }

    void add(std::string name, bool ok, std::string witness = "") {
        items.push_back({std::move(name), ok, std::move(witness)});
    }

    void merge(const CheckReport &other, const std::string &prefix = "") {
        for (const auto &it : other.items)
            items.push_back({prefix + it.name, it.passed, it.witness});
    }

    const CheckItem *firstFailure() const {
        for (const auto &it : items)
            if (!it.passed)
                return &it;
        return nullptr;
    }

    std::string summary() const {
        if (passed())
            return "all checks passed";
        const CheckItem *f = firstFailure();
        return f->name + " failed" + (f->witness.empty() ? "" : " at " + f->witness);
    }
};

// Thrown when a constructor's mathematical precondition fails; carries the
// report of the failing inner check.
struct PreconditionError : std::runtime_error {
    CheckReport report;
    PreconditionError(const std::string &msg, CheckReport r)
        : std::runtime_error(msg + ": " + r.summary()), report(std::move(r)) {}
    explicit PreconditionError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace homleib
