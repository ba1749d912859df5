#include "frobcheck/ring.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace frobcheck {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    std::uint64_t s = std::uint64_t{exps_[i]} + o.exps_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw ExponentOverflow();
    out.exps_[i] = static_cast<Exponent>(s);
  }
  return out;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] == 0) continue;
    if (k > std::numeric_limits<Exponent>::max() / exps_[i]) throw ExponentOverflow();
    out.exps_[i] = static_cast<Exponent>(exps_[i] * k);
  }
  return out;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  return MonomialOrder(OrderKind::Lex, std::vector<std::size_t>(nvars, 1));
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return MonomialOrder(OrderKind::GrevLex, {nvars}); }

MonomialOrder MonomialOrder::block(std::vector<std::size_t> sizes) {
  for (std::size_t s : sizes)
    if (s == 0) throw InvalidArgument("empty block in block order");
  return MonomialOrder(OrderKind::Block, std::move(sizes));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::size_t start = 0;
  for (std::size_t size : blocks_) {
    const std::size_t end = start + size;
    std::uint64_t da = 0;
    std::uint64_t db = 0;
    for (std::size_t i = start; i < end; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    // Within a block of equal degree: smaller exponent in the last differing
    // variable wins.
    for (std::size_t i = end; i-- > start;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    start = end;
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Block: {
      std::ostringstream os;
      os << "block(";
      for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i];
      os << ")";
      return os.str();
    }
  }
  return "?";
}

Ring::Ring(std::uint64_t p, std::vector<std::string> variables, std::optional<MonomialOrder> order) {
  PrimeField field(p);
  if (variables.empty()) throw InvalidArgument("ring needs at least one variable");
  if (variables.size() > kMaxVariables)
    throw InvalidArgument("too many variables (max " + std::to_string(kMaxVariables) + ")");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable " + v);
  }
  MonomialOrder ord = order.value_or(MonomialOrder::grevlex(variables.size()));
  const auto& blocks = ord.blocks();
  if (std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}) != variables.size())
    throw InvalidArgument("block order does not partition the variables");
  data_ = std::make_shared<const Data>(Data{field, std::move(variables), std::move(ord)});
}

std::size_t Ring::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw InvalidArgument("unknown variable " + name);
}

std::optional<std::size_t> Ring::find(const std::string& name) const {
  const auto& names = data_->names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

Ring Ring::with_order(MonomialOrder order) const { return Ring(characteristic(), variables(), std::move(order)); }

std::string Ring::describe() const {
  std::ostringstream os;
  os << "F" << characteristic() << "[";
  for (std::size_t i = 0; i < num_vars(); ++i) os << (i ? "," : "") << data_->names[i];
  os << "]";
  if (order().kind() != OrderKind::GrevLex) os << " " << order().describe();
  return os.str();
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->field == b.data_->field && a.data_->names == b.data_->names && a.data_->order == b.data_->order;
}

Ring make_ring(std::uint64_t p, std::vector<std::string> variables, OrderKind kind) {
  const std::size_t n = variables.size();
  switch (kind) {
    case OrderKind::Lex:
      return Ring(p, std::move(variables), MonomialOrder::lex(n));
    case OrderKind::GrevLex:
      return Ring(p, std::move(variables), MonomialOrder::grevlex(n));
    case OrderKind::Block:
      break;
  }
  throw InvalidArgument("block orders need explicit block sizes");
}

}  // namespace frobcheck
