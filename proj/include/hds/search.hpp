#pragma once

#include <vector>

#include "hds/pattern.hpp"

namespace hds {

// Reduced-shape parameters: l blocks with two levels and top value k0s[j] > 1,
// the remaining m-l blocks constant. k0s is kept non-increasing.
struct Profile {
    int n = 0;
    int m = 0;
    int l = 0;
    std::vector<int> k0s; // length l, values in [2, n], not all equal to n

    Rat m_statistic() const;
    CandidateClass realize() const; // blocks in descending pattern order

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.n == b.n && a.m == b.m && a.l == b.l && a.k0s == b.k0s;
    }
    friend bool operator<(const Profile& a, const Profile& b) {
        if (a.l != b.l) return a.l < b.l;
        return a.k0s < b.k0s;
    }
};

// All profiles whose statistic is an even positive integer <= 2m.
std::vector<Profile> enumerate_profiles(int n, int m);

// Addable classes up to block position, from profile realization plus
// expansion of the reduced classes with statistic < 2m.
std::vector<CandidateClass> enumerate_addable_classes(int n, int m);

// Independent route: scan every normalized parameter tuple with t_j <= m and
// sum t_j <= 2m-1 and keep the addable ones. Slower; used to cross-check the
// profile+expansion enumeration.
std::vector<CandidateClass> direct_class_search(int n, int m);

bool hamming_is_maximal(int n, int m);

// Largest n for which the embedded configuration is not maximal: m^2 + m - 1.
// With verify=true, confirms the frontier by search on both sides.
long long max_nonmaximal_n(int m, bool verify = false);

// Appends extra*n constant blocks; extra must be even when n is even.
CandidateClass lift_class(const CandidateClass& cls, int extra);

// Least m for which the padded profile (k0s, 1, ..., 1) becomes admissible:
// closed form l - sum k0^2 + i*n with i = ceil(sum k0(1+k0)/(n+1)) rounded up
// to even when n is even.
long long min_m_for(int n, int l, const std::vector<int>& k0s);
// Scan oracle for the closed form.
long long min_m_brute_force(int n, int l, const std::vector<int>& k0s, int max_m = 200);

} // namespace hds
