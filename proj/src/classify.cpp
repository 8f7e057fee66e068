#include "realforms/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace realforms {

const char* family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::sl_k: return "sl_k";
        case GroupFamily::sl_h: return "sl_h";
        case GroupFamily::su: return "su";
        case GroupFamily::so_odd: return "so_odd";
        case GroupFamily::sp_k: return "sp_k";
        case GroupFamily::su_h_hermitian: return "su_h_hermitian";
        case GroupFamily::so_even: return "so_even";
        case GroupFamily::su_h_antihermitian: return "su_h_antihermitian";
        case GroupFamily::g2: return "g2";
        case GroupFamily::f4: return "f4";
        case GroupFamily::e8: return "e8";
    }
    return "?";
}

std::optional<GroupFamily> family_from_name(const std::string& name) {
    static const std::pair<const char*, GroupFamily> table[] = {
        {"sl_k", GroupFamily::sl_k},
        {"sl_h", GroupFamily::sl_h},
        {"su", GroupFamily::su},
        {"so_odd", GroupFamily::so_odd},
        {"sp_k", GroupFamily::sp_k},
        {"su_h_hermitian", GroupFamily::su_h_hermitian},
        {"so_even", GroupFamily::so_even},
        {"su_h_antihermitian", GroupFamily::su_h_antihermitian},
        {"g2", GroupFamily::g2},
        {"f4", GroupFamily::f4},
        {"e8", GroupFamily::e8},
    };
    for (const auto& [nm, fam] : table)
        if (name == nm) return fam;
    return std::nullopt;
}

GroupDescriptor make_sl(int n) { return {GroupFamily::sl_k, n, 0, 0}; }
GroupDescriptor make_sl_h(int m) { return {GroupFamily::sl_h, m, 0, 0}; }
GroupDescriptor make_su(int n, int p) { return {GroupFamily::su, n, p, 0}; }
GroupDescriptor make_so(int n, int p) {
    return {n % 2 == 1 ? GroupFamily::so_odd : GroupFamily::so_even, n, p, 0};
}
GroupDescriptor make_sp(int n) { return {GroupFamily::sp_k, n, 0, 0}; }
GroupDescriptor make_su_h(int n, int p) {
    return {GroupFamily::su_h_hermitian, n, p, 0};
}
GroupDescriptor make_su_h_anti(int m) {
    return {GroupFamily::su_h_antihermitian, m, 0, 0};
}
GroupDescriptor make_g2(int form) { return {GroupFamily::g2, 0, 0, form}; }
GroupDescriptor make_f4(int form) { return {GroupFamily::f4, 0, 0, form}; }
GroupDescriptor make_e8(int form) { return {GroupFamily::e8, 0, 0, form}; }

namespace {

[[noreturn]] void reject(const std::string& field, const std::string& why) {
    throw std::invalid_argument("descriptor field '" + field + "': " + why);
}

void require_index(const GroupDescriptor& g) {
    if (g.p < 0 || g.p > g.n) reject("p", "need 0 <= p <= n");
}

}  // namespace

void validate(const GroupDescriptor& g) {
    switch (g.family) {
        case GroupFamily::sl_k:
            if (g.n < 2) reject("n", "sl_k needs n >= 2");
            break;
        case GroupFamily::sl_h:
            if (g.n < 1) reject("n", "sl_h needs m >= 1");
            break;
        case GroupFamily::su:
            if (g.n < 1) reject("n", "su needs n >= 1");
            require_index(g);
            break;
        case GroupFamily::so_odd:
            if (g.n < 1 || g.n % 2 == 0) reject("n", "so_odd needs odd n >= 1");
            require_index(g);
            break;
        case GroupFamily::sp_k:
            if (g.n < 1) reject("n", "sp_k needs n >= 1");
            break;
        case GroupFamily::su_h_hermitian:
            if (g.n < 1) reject("n", "su_h_hermitian needs n >= 1");
            require_index(g);
            break;
        case GroupFamily::so_even:
            if (g.n < 2 || g.n % 2 == 1) reject("n", "so_even needs even n >= 2");
            require_index(g);
            break;
        case GroupFamily::su_h_antihermitian:
            if (g.n < 1) reject("n", "su_h_antihermitian needs m >= 1");
            break;
        case GroupFamily::g2:
            if (g.form != kG2Compact && g.form != kG2Split)
                reject("form", "g2 form is compact (0) or split (1)");
            break;
        case GroupFamily::f4:
        case GroupFamily::e8:
            if (g.form < 0 || g.form > 2) reject("form", "form tag must be 0, 1 or 2");
            break;
    }
}

GroupDescriptor canonical_group(const GroupDescriptor& g) {
    validate(g);
    GroupDescriptor c = g;
    switch (g.family) {
        case GroupFamily::su:
        case GroupFamily::so_odd:
        case GroupFamily::so_even:
            c.p = std::min(g.p, g.n - g.p);
            break;
        default:
            break;
    }
    return c;
}

std::string trivial_label(const GroupDescriptor& g) {
    GroupDescriptor c = canonical_group(g);
    switch (c.family) {
        case GroupFamily::su:
        case GroupFamily::so_odd:
        case GroupFamily::so_even:
        case GroupFamily::su_h_hermitian:
            return std::to_string(c.p);
        case GroupFamily::sl_h:
            return "1";  // sign class in k*/k*+
        default:
            return "0";
    }
}

ClassificationResult classify(const GroupDescriptor& g) {
    GroupDescriptor c = canonical_group(g);
    ClassificationResult out;
    out.input = c;
    auto add = [&](std::string label, GroupDescriptor grp) {
        out.classes.push_back({std::move(label), grp});
    };
    switch (c.family) {
        case GroupFamily::sl_k:
        case GroupFamily::sp_k:
        case GroupFamily::su_h_antihermitian:
            add("0", c);
            break;
        case GroupFamily::sl_h:
            // both classes keep the group; labels are the sign classes
            add("1", c);
            add("-1", c);
            break;
        case GroupFamily::su:
            for (int q = c.p % 2; q <= c.n; q += 2) add(std::to_string(q), c);
            break;
        case GroupFamily::so_odd:
        case GroupFamily::so_even:
            for (int q = c.p % 2; q <= c.n; q += 2)
                add(std::to_string(q), make_so(c.n, std::min(q, c.n - q)));
            break;
        case GroupFamily::su_h_hermitian:
            for (int q = 0; q <= c.n; ++q) add(std::to_string(q), make_su_h(c.n, q));
            break;
        case GroupFamily::g2:
            add("0", c);
            add("1", make_g2(c.form == kG2Compact ? kG2Split : kG2Compact));
            break;
        case GroupFamily::f4:
        case GroupFamily::e8: {
            // trivial class keeps the input form; the remaining tags are
            // attached to the nontrivial classes in increasing order
            add("0", c);
            int label = 1;
            for (int t = 0; t < 3; ++t) {
                if (t == c.form) continue;
                GroupDescriptor other = c;
                other.form = t;
                add(std::to_string(label++), other);
            }
            break;
        }
    }
    out.count = static_cast<int>(out.classes.size());
    return out;
}

GroupDescriptor group_of_class(const GroupDescriptor& g, const std::string& label) {
    ClassificationResult r = classify(g);
    for (const auto& cls : r.classes)
        if (cls.label == label) return cls.galois_group;
    throw std::invalid_argument("group_of_class: no class labelled '" + label + "'");
}

std::string descriptor_str(const GroupDescriptor& g) {
    std::ostringstream os;
    os << family_name(g.family);
    switch (g.family) {
        case GroupFamily::sl_k:
        case GroupFamily::sl_h:
        case GroupFamily::sp_k:
        case GroupFamily::su_h_antihermitian:
            os << "(" << g.n << ")";
            break;
        case GroupFamily::su:
        case GroupFamily::so_odd:
        case GroupFamily::so_even:
        case GroupFamily::su_h_hermitian:
            os << "(" << g.n << "," << g.p << ")";
            break;
        case GroupFamily::g2:
            os << "(" << (g.form == kG2Compact ? "compact" : "split") << ")";
            break;
        case GroupFamily::f4:
        case GroupFamily::e8:
            os << "(" << g.form << ")";
            break;
    }
    return os.str();
}

}  // namespace realforms
