#include "fecount/monoid.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "fecount/errors.hpp"

namespace fecount {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (auto m : orders_) {
    if (m == 0) throw std::invalid_argument("cyclic factor order must be >= 1");
    if (order_ > std::numeric_limits<std::uint64_t>::max() / m)
      throw std::overflow_error("group order does not fit in 64 bits");
    order_ *= m;
  }
}

std::string FiniteAbelianGroup::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (j) s += 'x';
    s += "Z/" + std::to_string(orders_[j]);
  }
  return s;
}

GroupElement::GroupElement(FiniteAbelianGroup group, std::vector<std::uint64_t> residues)
    : group_(std::move(group)), residues_(std::move(residues)) {
  const auto& orders = group_.cyclic_orders();
  if (residues_.size() != orders.size())
    throw GroupMismatch("element has " + std::to_string(residues_.size()) +
                        " residues but " + group_.to_string() + " has " +
                        std::to_string(orders.size()) + " cyclic factors");
  for (std::size_t j = 0; j < orders.size(); ++j) residues_[j] %= orders[j];
}

GroupElement GroupElement::identity(const FiniteAbelianGroup& group) {
  return GroupElement(group, std::vector<std::uint64_t>(group.cyclic_orders().size(), 0));
}

bool GroupElement::is_identity() const noexcept {
  for (auto r : residues_)
    if (r != 0) return false;
  return true;
}

std::string GroupElement::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < residues_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(residues_[j]);
  }
  return s;
}

std::vector<GroupElement> all_elements(const FiniteAbelianGroup& group) {
  const auto& orders = group.cyclic_orders();
  std::vector<GroupElement> out;
  out.reserve(group.order());
  std::vector<std::uint64_t> r(orders.size(), 0);
  for (;;) {
    out.emplace_back(group, r);
    std::size_t j = r.size();
    while (j > 0) {
      --j;
      if (++r[j] < orders[j]) break;
      r[j] = 0;
      if (j == 0) return out;
    }
  }
}

namespace {

void require_same_group(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  if (!(a == b)) throw GroupMismatch("elements of " + a.to_string() + " and " + b.to_string());
}

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

}  // namespace

GroupElement group_add(const GroupElement& a, const GroupElement& b) {
  require_same_group(a.group(), b.group());
  const auto& orders = a.group().cyclic_orders();
  std::vector<std::uint64_t> r(orders.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    // Residues are < m, so the sum fits unless m is close to 2^64.
    const std::uint64_t x = a.residues()[j], y = b.residues()[j], m = orders[j];
    r[j] = x >= m - y ? x - (m - y) : x + y;
  }
  return GroupElement(a.group(), std::move(r));
}

GroupElement group_scale(std::uint64_t c, const GroupElement& a) {
  const auto& orders = a.group().cyclic_orders();
  std::vector<std::uint64_t> r(orders.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = mul_mod(c % orders[j], a.residues()[j], orders[j]);
  return GroupElement(a.group(), std::move(r));
}

GroupElement group_negate(const GroupElement& a) {
  const auto& orders = a.group().cyclic_orders();
  std::vector<std::uint64_t> r(orders.size());
  for (std::size_t j = 0; j < r.size(); ++j)
    r[j] = a.residues()[j] == 0 ? 0 : orders[j] - a.residues()[j];
  return GroupElement(a.group(), std::move(r));
}

ModuleClass ModuleClass::make(std::uint64_t rank, GroupElement det) {
  if (rank == 0) throw std::invalid_argument("a nonzero module class needs rank >= 1");
  ModuleClass c;
  c.rank_ = rank;
  c.det_ = std::move(det);
  return c;
}

ModuleClass ModuleClass::free_module(std::uint64_t n, const FiniteAbelianGroup& group) {
  return n == 0 ? zero() : make(n, GroupElement::identity(group));
}

const GroupElement& ModuleClass::det() const {
  if (!det_) throw std::logic_error("the zero module class carries no determinant");
  return *det_;
}

std::string ModuleClass::to_string() const {
  if (is_zero()) return "0";
  return "(" + std::to_string(rank_) + ";" + det_->to_string() + ")";
}

ModuleClass direct_sum(const ModuleClass& p, const ModuleClass& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  return ModuleClass::make(p.rank() + q.rank(), group_add(p.det(), q.det()));
}

std::uint64_t rank_of(const ModuleClass& p) noexcept { return p.rank(); }

RingSpec RingSpec::dedekind(PicardSpec pic) {
  RingSpec r(Kind::Dedekind);
  r.pic_ = std::move(pic);
  return r;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  if (factors.empty()) throw std::invalid_argument("a product ring needs at least one factor");
  RingSpec r(Kind::Product);
  for (auto& f : factors) {
    if (f.kind_ == Kind::Product)
      r.factors_.insert(r.factors_.end(), f.factors_.begin(), f.factors_.end());
    else
      r.factors_.push_back(std::move(f));
  }
  return r;
}

RingSpec RingSpec::modular_integers(std::uint64_t l) {
  if (l < 2) throw std::invalid_argument("Z/l needs l >= 2");
  std::vector<RingSpec> factors;
  for (std::uint64_t q = 2; q <= l / q; ++q) {
    if (l % q != 0) continue;
    factors.push_back(projectively_trivial());
    while (l % q == 0) l /= q;
  }
  if (l > 1) factors.push_back(projectively_trivial());
  return product(std::move(factors));
}

const PicardSpec& RingSpec::picard() const {
  if (kind_ != Kind::Dedekind) throw std::logic_error("picard() on a non-Dedekind ring spec");
  return pic_;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::ProjectivelyTrivial:
      return "trivial";
    case Kind::Dedekind: {
      if (pic_.is_infinite()) return "dedekind(inf)";
      std::string s;
      for (std::size_t j = 0; j < pic_.group->cyclic_orders().size(); ++j) {
        if (j) s += 'x';
        s += std::to_string(pic_.group->cyclic_orders()[j]);
      }
      return "dedekind(" + s + ")";
    }
    case Kind::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ',';
        s += factors_[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::uint64_t parse_u64(const std::string& raw, const char* what) {
  const std::string s = strip(raw);
  if (s.empty()) throw std::invalid_argument(std::string("empty ") + what);
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
      throw std::invalid_argument(std::string(what) + " '" + s + "' is too large");
    v = v * 10 + d;
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Splits on top-level commas only.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced parentheses in ring spec");
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in ring spec");
  out.push_back(cur);
  return out;
}

}  // namespace

FiniteAbelianGroup parse_group(const std::string& text) {
  std::vector<std::uint64_t> orders;
  for (auto part : split(strip(text), 'x')) {
    part = strip(part);
    if (part.rfind("Z/", 0) == 0) part = part.substr(2);
    const auto m = parse_u64(part, "cyclic order");
    if (m == 0) throw std::invalid_argument("cyclic order must be >= 1");
    orders.push_back(m);
  }
  return FiniteAbelianGroup(std::move(orders));
}

GroupElement parse_element(const std::string& text, const FiniteAbelianGroup& group) {
  std::vector<std::uint64_t> residues;
  for (const auto& part : split(strip(text), ',')) residues.push_back(parse_u64(part, "residue"));
  return GroupElement(group, std::move(residues));
}

RingSpec parse_ring_spec(const std::string& text) {
  const std::string s = strip(text);
  if (s == "trivial") return RingSpec::projectively_trivial();
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("unrecognized ring spec '" + s + "'");
  const std::string head = strip(s.substr(0, open));
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  if (head == "dedekind") {
    const std::string b = strip(body);
    if (b == "inf" || b == "infinite") return RingSpec::dedekind(PicardSpec::infinite());
    return RingSpec::dedekind(PicardSpec::finite(parse_group(b)));
  }
  if (head == "zmod") return RingSpec::modular_integers(parse_u64(body, "modulus"));
  if (head == "product") {
    std::vector<RingSpec> factors;
    for (const auto& arg : split_args(body)) factors.push_back(parse_ring_spec(arg));
    return RingSpec::product(std::move(factors));
  }
  throw std::invalid_argument("unrecognized ring spec '" + s + "'");
}

}  // namespace fecount
