#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace xsect {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when passing
    std::string note;
};

class Report {
public:
    void add(std::string name, bool pass, std::string witness = {}, std::string note = {}) {
        checks_.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness), std::move(note)});
    }
    void merge(const Report& other) {
        for (auto& c : other.checks_) checks_.push_back(c);
    }
    bool summary() const {
        for (auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    const std::vector<Check>& checks() const { return checks_; }

    const Check* find(const std::string& name) const {
        for (auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Report& r) {
        for (auto& c : r.checks_) {
            os << "check " << c.name << ' ' << (c.pass ? "PASS" : "FAIL");
            if (!c.note.empty()) os << " (" << c.note << ")";
            if (!c.pass && !c.witness.empty()) os << " : " << c.witness;
            os << '\n';
        }
        os << "summary " << (r.summary() ? "PASS" : "FAIL") << '\n';
        return os;
    }

private:
    std::vector<Check> checks_;
};

}  // namespace xsect
