#include "prelie/decoration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prelie {

DecorationSet::DecorationSet(std::vector<std::string> names, std::vector<std::vector<int>> product)
    : names_(std::move(names)), product_(std::move(product)) {
    int n = size();
    if (static_cast<int>(product_->size()) != n)
        throw std::invalid_argument("DecorationSet: product table is not total");
    for (const auto& row : *product_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("DecorationSet: product table row is not total");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("DecorationSet: product out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if ((*product_)[a][b] != (*product_)[b][a])
                throw std::invalid_argument("DecorationSet: product is not commutative");
            for (int c = 0; c < n; ++c)
                if ((*product_)[(*product_)[a][b]][c] != (*product_)[a][(*product_)[b][c]])
                    throw std::invalid_argument("DecorationSet: product is not associative");
        }
}

int DecorationSet::index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw std::invalid_argument("DecorationSet: unknown decoration '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

int DecorationSet::product(int a, int b) const {
    if (!product_)
        throw std::runtime_error("DecorationSet: no product table (required for contraction)");
    return (*product_).at(a).at(b);
}

int DecorationSet::product_all(const std::vector<int>& ds) const {
    if (ds.empty()) throw std::invalid_argument("DecorationSet: empty product");
    int acc = ds[0];
    for (size_t i = 1; i < ds.size(); ++i) acc = product(acc, ds[i]);
    return acc;
}

DecorationSet DecorationSet::cyclic(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("d" + std::to_string(i));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return DecorationSet(std::move(names), std::move(table));
}

DecorationSet DecorationSet::free_commutative(const std::vector<std::string>& letters, int cap) {
    if (cap < 1) throw std::invalid_argument("free_commutative: cap must be >= 1");
    int L = static_cast<int>(letters.size());
    using Expo = std::vector<int>;
    std::vector<Expo> elems;
    std::map<Expo, int> index;
    Expo cur(L, 0);
    auto total = [](const Expo& e) {
        int t = 0;
        for (int v : e) t += v;
        return t;
    };
    while (true) {
        if (total(cur) >= 1 && total(cur) <= cap) {
            index[cur] = static_cast<int>(elems.size());
            elems.push_back(cur);
        }
        int pos = L - 1;
        while (pos >= 0 && cur[pos] == cap) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    std::vector<std::string> names;
    for (const auto& e : elems) {
        std::string n;
        for (int i = 0; i < L; ++i)
            for (int k = 0; k < e[i]; ++k) {
                if (!n.empty()) n += ".";
                n += letters[i];
            }
        names.push_back(n);
    }
    int top = static_cast<int>(elems.size());
    names.push_back("(top)");
    int n = top + 1;
    // products past the cap land on an absorbing top element, which keeps
    // the truncated table associative
    std::vector<std::vector<int>> table(n, std::vector<int>(n, top));
    for (int a = 0; a < top; ++a)
        for (int b = 0; b < top; ++b) {
            Expo sum(L);
            int t = 0;
            for (int i = 0; i < L; ++i) {
                sum[i] = elems[a][i] + elems[b][i];
                t += sum[i];
            }
            table[a][b] = t > cap ? top : index.at(sum);
        }
    return DecorationSet(std::move(names), std::move(table));
}

}  // namespace prelie
