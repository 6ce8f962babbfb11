#include "gammakit/oligopoly/coalition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace gammakit::oligopoly {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Coalition::Coalition(std::vector<std::size_t> members, std::size_t firm_count)
    : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("coalition must be nonempty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("coalition lists a firm twice");
  }
  if (members_.back() >= firm_count) {
    throw std::invalid_argument("firm " + std::to_string(members_.back() + 1) +
                                " does not exist (n = " + std::to_string(firm_count) + ")");
  }
}

Coalition Coalition::singleton(std::size_t firm, std::size_t firm_count) {
  return Coalition({firm}, firm_count);
}

Coalition Coalition::from_mask(std::uint64_t mask, std::size_t firm_count) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) members.push_back(i);
  }
  return Coalition(std::move(members), firm_count);
}

Coalition Coalition::grand(std::size_t firm_count) {
  std::vector<std::size_t> members(firm_count);
  for (std::size_t i = 0; i < firm_count; ++i) members[i] = i;
  return Coalition(std::move(members), firm_count);
}

Coalition Coalition::parse(std::string_view text, std::size_t firm_count) {
  std::vector<std::size_t> members;
  for (auto part : split(text, ',')) {
    part = trim(part);
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), index);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || index == 0) {
      throw std::invalid_argument("malformed firm index '" + std::string(part) +
                                  "' (expected a 1-based integer)");
    }
    members.push_back(index - 1);
  }
  return Coalition(std::move(members), firm_count);
}

bool Coalition::contains(std::size_t firm) const {
  return std::binary_search(members_.begin(), members_.end(), firm);
}

std::uint64_t Coalition::mask() const {
  std::uint64_t m = 0;
  for (auto i : members_) {
    if (i >= 64) throw std::out_of_range("coalition mask needs fewer than 64 firms");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

std::string Coalition::to_string() const {
  std::string out;
  for (auto i : members_) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out;
}

std::vector<std::size_t> Coalition::one_based() const {
  std::vector<std::size_t> out;
  for (auto i : members_) out.push_back(i + 1);
  return out;
}

Partition::Partition(std::vector<Coalition> blocks, std::size_t firm_count)
    : blocks_(std::move(blocks)), owner_(firm_count, firm_count), firm_count_(firm_count) {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (auto i : blocks_[k].members()) {
      if (i >= firm_count) throw std::invalid_argument("partition names a nonexistent firm");
      if (owner_[i] != firm_count) {
        throw std::invalid_argument("partition blocks overlap at firm " + std::to_string(i + 1));
      }
      owner_[i] = k;
    }
  }
  for (std::size_t i = 0; i < firm_count; ++i) {
    if (owner_[i] == firm_count) {
      throw std::invalid_argument("partition does not cover firm " + std::to_string(i + 1));
    }
  }
}

Partition Partition::singletons(std::size_t firm_count) {
  std::vector<Coalition> blocks;
  for (std::size_t i = 0; i < firm_count; ++i) blocks.push_back(Coalition::singleton(i, firm_count));
  return Partition(std::move(blocks), firm_count);
}

Partition Partition::around(const Coalition& coalition, std::size_t firm_count) {
  std::vector<Coalition> blocks = {coalition};
  for (std::size_t i = 0; i < firm_count; ++i) {
    if (!coalition.contains(i)) blocks.push_back(Coalition::singleton(i, firm_count));
  }
  return Partition(std::move(blocks), firm_count);
}

Partition Partition::parse(std::string_view text, std::size_t firm_count) {
  std::vector<Coalition> blocks;
  for (auto part : split(text, '|')) blocks.push_back(Coalition::parse(part, firm_count));
  return Partition(std::move(blocks), firm_count);
}

std::size_t Partition::actor_of(std::size_t firm) const { return owner_.at(firm); }

std::string Partition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += '|';
    out += b.to_string();
  }
  return out;
}

}  // namespace gammakit::oligopoly
