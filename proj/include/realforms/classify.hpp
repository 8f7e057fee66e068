#pragma once

#include <optional>
#include <string>
#include <vector>

namespace realforms {

/// The simple real groups the classification covers. For the families with a
/// form parameter p, descriptors are canonicalized to min(p, n-p) since a
/// form and its negative share their automorphism group. Exceptional F4/E8
/// form labels are opaque tags 0..2; G2 forms are compact (0) / split (1).
enum class GroupFamily {
    sl_k,                // SL(n, k), n >= 2
    sl_h,                // SL(m, H), m >= 1
    su,                  // SU(n, k(i), h_p)
    so_odd,              // SO(n, k, Q_p), n odd
    sp_k,                // Sp(2n, k)
    su_h_hermitian,      // SU(n, H, h_p), h sigma-hermitian
    so_even,             // SO(n, k, Q_p), n even
    su_h_antihermitian,  // SU(m, H, h), h sigma-anti-hermitian
    g2,
    f4,
    e8,
};

const char* family_name(GroupFamily f);
std::optional<GroupFamily> family_from_name(const std::string& name);

inline constexpr int kG2Compact = 0;
inline constexpr int kG2Split = 1;

struct GroupDescriptor {
    GroupFamily family;
    int n = 0;     // dimension parameter (quaternionic size for the H families)
    int p = 0;     // form index where applicable
    int form = 0;  // exceptional form tag

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor make_sl(int n);
GroupDescriptor make_sl_h(int m);
GroupDescriptor make_su(int n, int p);
GroupDescriptor make_so(int n, int p);  // odd/even resolved by n
GroupDescriptor make_sp(int n);
GroupDescriptor make_su_h(int n, int p);
GroupDescriptor make_su_h_anti(int m);
GroupDescriptor make_g2(int form);
GroupDescriptor make_f4(int form);
GroupDescriptor make_e8(int form);

/// Throws invalid_argument naming the offending field.
void validate(const GroupDescriptor& g);

/// Idempotent index folding p ↦ min(p, n-p) for su / so_odd / so_even;
/// identity elsewhere. classify agrees on g and canonical_group(g).
GroupDescriptor canonical_group(const GroupDescriptor& g);

/// One isomorphism class of Picard-Vessiot extensions: the representative
/// label (cocycle index q, sign class, or opaque tag) and its differential
/// Galois group.
struct PVClass {
    std::string label;
    GroupDescriptor galois_group;
};

struct ClassificationResult {
    GroupDescriptor input;  // canonicalized
    int count = 0;
    std::vector<PVClass> classes;
};

/// The label of the class whose Galois group is the input group itself.
std::string trivial_label(const GroupDescriptor& g);

/// Number and Galois groups of the isomorphism classes of Picard-Vessiot
/// extensions for an equation with group g, per family:
///   sl_k 1; sl_h 2 (both groups g); su [n/2]+1 or [n/2] (all groups g);
///   so_odd (n+1)/2 over every real form; sp_k 1; su_h_hermitian n+1 over
///   every index; so_even n/2+1 or n/2 with q ~ n-q identified;
///   su_h_antihermitian 1; g2 2 (both forms); f4, e8 3 (every form once).
ClassificationResult classify(const GroupDescriptor& g);

/// The galois_group field of the class with the given label.
GroupDescriptor group_of_class(const GroupDescriptor& g, const std::string& label);

std::string descriptor_str(const GroupDescriptor& g);

}  // namespace realforms
