#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace medgeo {

/// Subset of a finite ground set {0, ..., n-1}.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

using Labels = std::vector<std::string>;

PointSet make_set(std::size_t n, std::span<const int> members);
PointSet singleton(std::size_t n, int member);
PointSet full_set(std::size_t n);
std::vector<int> members(const PointSet& s);

/// Lexicographic comparison of the sorted member lists.
bool lex_less(const PointSet& a, const PointSet& b);

/// Index of `label`, or -1.
int find_label(const Labels& labels, const std::string& label);

std::vector<std::string> member_labels(const PointSet& s, const Labels& labels);

/// "{a,b,c}" rendering used in reports and test diagnostics.
std::string format_set(const PointSet& s, const Labels& labels);

}  // namespace medgeo
