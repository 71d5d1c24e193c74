#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace prelie {

/// Ordered list of distinct basis-element names. Indices are assigned in
/// declaration order and stay stable for the session.
class Basis {
public:
    Basis() = default;
    explicit Basis(std::vector<std::string> names) {
        for (auto& n : names) add(n);
    }

    int add(const std::string& name) {
        if (index_.count(name))
            throw std::invalid_argument("Basis: duplicate name '" + name + "'");
        int i = static_cast<int>(names_.size());
        names_.push_back(name);
        index_[name] = i;
        return i;
    }

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("Basis: unknown name '" + name + "'");
        return it->second;
    }
    bool contains(const std::string& name) const { return index_.count(name) > 0; }

    friend bool operator==(const Basis& a, const Basis& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

}  // namespace prelie
