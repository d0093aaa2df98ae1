#include "gkd/gkdim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gkd {

namespace {

void require_weight_length(const LieType& type, const Weight& w) {
    if (static_cast<int>(w.size()) != type.rank())
        throw std::invalid_argument("weight has length " + std::to_string(w.size()) +
                                    ", expected " + std::to_string(type.rank()) +
                                    " for " + to_string(type));
}

// Residue class key: plain residue for A; for B/C/D the residues r and 1-r
// are identified, so the key is min(r, 1-r).
Rational class_key(LieKind kind, const Rational& value) {
    Rational r = residue_mod1(value);
    if (kind == LieKind::A || r == 0)
        return r;
    Rational mirrored = Rational(1) - r;
    return std::min(r, mirrored);
}

void append_to_class(std::optional<Sequence>& slot, const Rational& value) {
    if (!slot)
        slot.emplace();
    slot->push_back(value);
}

long sum_f(Flavor flavor, const std::optional<Sequence>& cls) {
    if (!cls)
        return 0;
    return f_value(flavor, minus_extend(*cls));
}

}  // namespace

Sequence minus_extend(const Sequence& x) {
    Sequence result = x;
    result.reserve(2 * x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        result.push_back(-*it);
    return result;
}

ClassDecomposition decompose(const LieType& type, const Weight& w) {
    require_weight_length(type, w);
    ClassDecomposition classes;
    std::map<Rational, size_t> other_index;
    const Rational half(1, 2);
    for (const Rational& value : w) {
        Rational key = class_key(type.kind(), value);
        if (key == 0) {
            append_to_class(classes.integral_class, value);
        } else if (type.kind() != LieKind::A && key == half) {
            append_to_class(classes.half_class, value);
        } else {
            auto [it, inserted] = other_index.try_emplace(key, classes.other_classes.size());
            if (inserted)
                classes.other_classes.emplace_back();
            classes.other_classes[it->second].push_back(value);
        }
    }
    return classes;
}

Sequence normalize_class(const Sequence& x) {
    if (x.empty())
        return x;
    Rational head = residue_mod1(x.front());
    Rational mirrored = head == 0 ? head : Rational(1) - head;
    Sequence linked;
    Sequence opposite;
    for (const Rational& value : x) {
        Rational r = residue_mod1(value);
        if (r == head)
            linked.push_back(value);
        else if (r == mirrored)
            opposite.push_back(value);
        else
            throw std::invalid_argument("normalize_class: entries are not a single linkage class");
    }
    for (auto it = opposite.rbegin(); it != opposite.rend(); ++it)
        linked.push_back(-*it);
    return linked;
}

long gk_dimension_integral(const LieType& type, const Weight& w) {
    require_weight_length(type, w);
    const long ambient = positive_root_count(type);

    if (type.kind() == LieKind::A) {
        Rational common = residue_mod1(w.front());
        for (const Rational& value : w)
            if (residue_mod1(value) != common)
                throw std::domain_error("integral formula needs pairwise-integral differences");
        return ambient - f_value(Flavor::A, w);
    }

    bool all_int = std::all_of(w.begin(), w.end(), [](const Rational& v) { return is_integer(v); });
    bool all_half = std::all_of(w.begin(), w.end(), [](const Rational& v) { return is_half_integer(v); });
    bool ok = type.kind() == LieKind::C ? all_int : (all_int || all_half);
    if (!ok)
        throw std::domain_error("integral formula needs an integral weight for " + to_string(type));

    Flavor flavor = type.kind() == LieKind::D ? Flavor::D : Flavor::B;
    return ambient - f_value(flavor, minus_extend(w));
}

long gk_dimension(const LieType& type, const Weight& w) {
    require_weight_length(type, w);
    const long ambient = positive_root_count(type);
    ClassDecomposition classes = decompose(type, w);

    long total = ambient;
    if (type.kind() == LieKind::A) {
        if (classes.integral_class)
            total -= f_value(Flavor::A, *classes.integral_class);
        for (const Sequence& cls : classes.other_classes)
            total -= f_value(Flavor::A, cls);
    } else {
        Flavor integral_flavor = type.kind() == LieKind::D ? Flavor::D : Flavor::B;
        Flavor half_flavor = type.kind() == LieKind::B ? Flavor::B : Flavor::D;
        total -= sum_f(integral_flavor, classes.integral_class);
        total -= sum_f(half_flavor, classes.half_class);
        for (const Sequence& cls : classes.other_classes)
            total -= f_value(Flavor::A, normalize_class(cls));
    }

    if (total < 0 || total > ambient)
        throw std::logic_error("GK dimension " + std::to_string(total) +
                               " escaped [0, " + std::to_string(ambient) + "]");
    return total;
}

}  // namespace gkd
