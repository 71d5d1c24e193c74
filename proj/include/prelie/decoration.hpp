#pragma once

#include <optional>
#include <string>
#include <vector>

namespace prelie {

/// The decoration set D, with an optional commutative associative product
/// table (needed by edge contraction, which multiplies merged decorations).
class DecorationSet {
public:
    DecorationSet() = default;
    explicit DecorationSet(std::vector<std::string> names) : names_(std::move(names)) {}
    DecorationSet(std::vector<std::string> names, std::vector<std::vector<int>> product);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& name) const;

    bool has_product() const { return product_.has_value(); }
    int product(int a, int b) const;
    /// Product over a nonempty list of decorations.
    int product_all(const std::vector<int>& ds) const;

    /// ℤ/n with addition: names 0, 1, …
    static DecorationSet cyclic(int n);
    /// Free commutative semigroup on the letters, truncated at total degree
    /// `cap`; products past the cap land on an absorbing top element, which
    /// keeps the table associative.
    static DecorationSet free_commutative(const std::vector<std::string>& letters, int cap);

private:
    std::vector<std::string> names_;
    std::optional<std::vector<std::vector<int>>> product_;
};

}  // namespace prelie
