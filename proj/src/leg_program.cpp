#include "hopfcyc/leg_program.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hopfcyc {

namespace {

std::string step_name(std::size_t i, const LegProgram::Step& s) {
  return "step " + std::to_string(i) + " (" + s.label + ")";
}

// Shape after one step; throws CompileError on mismatch.
TensorShape advance(const TensorShape& in, std::size_t i, const LegProgram::Step& s) {
  const auto& f = in.factors();
  if (s.kind == LegProgram::Step::Kind::permute) {
    if (s.perm.size() != f.size())
      throw CompileError(step_name(i, s) + ": permutation of " + std::to_string(s.perm.size()) + " legs applied to " +
                         in.to_string());
    std::vector<bool> seen(f.size(), false);
    std::vector<std::size_t> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (s.perm[k] >= f.size() || seen[s.perm[k]]) throw CompileError(step_name(i, s) + ": not a permutation");
      seen[s.perm[k]] = true;
      out[s.perm[k]] = f[k];
    }
    return TensorShape(out);
  }
  const auto& dom = s.map.domain().factors();
  if (s.first_leg + dom.size() > f.size())
    throw CompileError(step_name(i, s) + ": legs [" + std::to_string(s.first_leg) + ", " +
                       std::to_string(s.first_leg + dom.size()) + ") exceed " + in.to_string());
  for (std::size_t k = 0; k < dom.size(); ++k)
    if (f[s.first_leg + k] != dom[k])
      throw CompileError(step_name(i, s) + ": map domain " + s.map.domain().to_string() + " does not match legs of " +
                         in.to_string() + " starting at " + std::to_string(s.first_leg));
  std::vector<std::size_t> out(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(s.first_leg));
  for (auto d : s.map.codomain().factors()) out.push_back(d);
  out.insert(out.end(), f.begin() + static_cast<std::ptrdiff_t>(s.first_leg + dom.size()), f.end());
  return TensorShape(out);
}

std::size_t product(const std::vector<std::size_t>& f, std::size_t b, std::size_t e) {
  std::size_t p = 1;
  for (std::size_t k = b; k < e; ++k) p *= f[k];
  return p;
}

SparseVec finish(std::unordered_map<std::size_t, Scalar>& acc) {
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.push_back({k, std::move(v)});
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return out;
}

SparseVec run_step(const Field& fld, const TensorShape& in, const TensorShape& out, const LegProgram::Step& s,
                   const SparseVec& v) {
  std::unordered_map<std::size_t, Scalar> acc;
  if (s.kind == LegProgram::Step::Kind::permute) {
    const auto& f = in.factors();
    std::vector<std::size_t> target(f.size());
    SparseVec r;
    r.reserve(v.size());
    for (const auto& e : v) {
      const auto idx = tensor_unindex(in, e.index);
      for (std::size_t k = 0; k < f.size(); ++k) target[s.perm[k]] = idx[k];
      r.push_back({tensor_index(out, target), e.value});
    }
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    return r;
  }
  const auto& f = in.factors();
  const std::size_t k = s.map.domain().rank();
  const std::size_t mid_in = product(f, s.first_leg, s.first_leg + k);
  const std::size_t right = product(f, s.first_leg + k, f.size());
  const std::size_t mid_out = s.map.codomain().total();
  for (const auto& e : v) {
    const std::size_t r = e.index % right;
    const std::size_t m = (e.index / right) % mid_in;
    const std::size_t l = e.index / right / mid_in;
    for (const auto& c : s.map.column(m)) {
      const std::size_t idx = (l * mid_out + c.index) * right + r;
      auto [it, fresh] = acc.try_emplace(idx, Scalar::zero(fld));
      it->second += e.value * c.value;
    }
  }
  return finish(acc);
}

}  // namespace

LegProgram& LegProgram::apply(std::size_t first_leg, LinearMap map, std::string label) {
  steps_.push_back({Step::Kind::apply, first_leg, std::move(map), {}, std::move(label)});
  return *this;
}

LegProgram& LegProgram::permute(std::vector<std::size_t> perm, std::string label) {
  steps_.push_back({Step::Kind::permute, 0, {}, std::move(perm), std::move(label)});
  return *this;
}

LegProgram& LegProgram::then(const LegProgram& next) {
  steps_.insert(steps_.end(), next.steps_.begin(), next.steps_.end());
  return *this;
}

TensorShape LegProgram::output_shape(const TensorShape& input) const {
  TensorShape s = input;
  for (std::size_t i = 0; i < steps_.size(); ++i) s = advance(s, i, steps_[i]);
  return s;
}

SparseVec LegProgram::run(const Field& f, const TensorShape& input, const SparseVec& v) const {
  TensorShape s = input;
  SparseVec cur = v;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    TensorShape next = advance(s, i, steps_[i]);
    cur = run_step(f, s, next, steps_[i], cur);
    s = std::move(next);
  }
  return cur;
}

LinearMap LegProgram::compile(const Field& f, const TensorShape& input) const {
  // Shape-check once, then push every basis vector through.
  std::vector<TensorShape> shapes{input};
  for (std::size_t i = 0; i < steps_.size(); ++i) shapes.push_back(advance(shapes.back(), i, steps_[i]));
  std::vector<SparseVec> cols(input.total());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec cur{{j, Scalar::one(f)}};
    for (std::size_t i = 0; i < steps_.size() && !cur.empty(); ++i)
      cur = run_step(f, shapes[i], shapes[i + 1], steps_[i], cur);
    cols[j] = std::move(cur);
  }
  return LinearMap::from_columns(f, input, shapes.back(), std::move(cols));
}

std::string LegProgram::dump() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    os << i << ": ";
    if (s.kind == Step::Kind::permute) {
      os << "permute [";
      for (std::size_t k = 0; k < s.perm.size(); ++k) os << (k ? " " : "") << s.perm[k];
      os << "]";
    } else if (s.map.domain().rank() == 0) {
      os << "insert " << s.map.codomain().to_string() << " at leg " << s.first_leg;
    } else {
      os << "apply " << s.map.domain().to_string() << " -> " << s.map.codomain().to_string() << " at leg "
         << s.first_leg;
    }
    os << "  # " << s.label << "\n";
  }
  return os.str();
}

LegBuilder::LegBuilder(const Field& f, std::vector<std::string> labels, const TensorShape& shape)
    : field_(f), input_(shape), labels_(std::move(labels)), shape_(shape) {
  if (labels_.size() != shape.rank()) throw CompileError("leg labels do not match the input shape");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw CompileError("duplicate leg labels");
}

std::size_t LegBuilder::position(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw CompileError("no leg named '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

void LegBuilder::reorder(const std::vector<std::string>& order) {
  if (order == labels_) return;
  std::vector<std::size_t> perm(labels_.size());
  std::vector<std::size_t> factors(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    auto it = std::find(order.begin(), order.end(), labels_[k]);
    perm[k] = static_cast<std::size_t>(it - order.begin());
    factors[perm[k]] = shape_[k];
  }
  program_.permute(perm, "gather");
  labels_ = order;
  shape_ = TensorShape(factors);
}

LegBuilder& LegBuilder::apply(const LinearMap& m, const std::vector<std::string>& inputs,
                              const std::vector<std::string>& outputs, std::string label) {
  if (outputs.size() != m.codomain().rank())
    throw CompileError(label + ": " + std::to_string(outputs.size()) + " output names for codomain " +
                       m.codomain().to_string());
  std::size_t first = labels_.size();
  if (!inputs.empty()) {
    std::vector<std::size_t> pos;
    for (const auto& in : inputs) pos.push_back(position(in));
    const std::size_t anchor = pos.front();
    std::vector<std::string> rest;
    std::size_t before = 0;
    for (std::size_t k = 0; k < labels_.size(); ++k) {
      if (std::find(inputs.begin(), inputs.end(), labels_[k]) != inputs.end()) continue;
      if (k < anchor) ++before;
      rest.push_back(labels_[k]);
    }
    std::vector<std::string> order(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(before));
    order.insert(order.end(), inputs.begin(), inputs.end());
    order.insert(order.end(), rest.begin() + static_cast<std::ptrdiff_t>(before), rest.end());
    reorder(order);
    first = before;
  }
  program_.apply(first, m, label);
  std::vector<std::string> next(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(first));
  next.insert(next.end(), outputs.begin(), outputs.end());
  next.insert(next.end(), labels_.begin() + static_cast<std::ptrdiff_t>(first + inputs.size()), labels_.end());
  for (const auto& o : outputs)
    if (std::count(next.begin(), next.end(), o) != 1) throw CompileError(label + ": leg name '" + o + "' is not unique");
  shape_ = advance(shape_, program_.steps().size() - 1, program_.steps().back());
  labels_ = std::move(next);
  return *this;
}

LegBuilder& LegBuilder::arrange(const std::vector<std::string>& order) {
  std::vector<std::string> a = order, b = labels_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw CompileError("arrange must list exactly the current legs");
  reorder(order);
  return *this;
}

LinearMap comultiplication(const CoalgebraInstance& c) {
  return c.comultiplication.reshaped(TensorShape{c.dim}, TensorShape{c.dim, c.dim});
}
LinearMap counit(const CoalgebraInstance& c) { return c.counit.reshaped(TensorShape{c.dim}, TensorShape{}); }
LinearMap comultiplication(const HopfInstance& h) {
  return h.comultiplication.reshaped(TensorShape{h.dim}, TensorShape{h.dim, h.dim});
}
LinearMap counit(const HopfInstance& h) { return h.counit.reshaped(TensorShape{h.dim}, TensorShape{}); }
LinearMap multiplication(const HopfInstance& h) {
  return h.multiplication.reshaped(TensorShape{h.dim, h.dim}, TensorShape{h.dim});
}
LinearMap unit(const HopfInstance& h) { return h.unit.reshaped(TensorShape{}, TensorShape{h.dim}); }
LinearMap antipode(const HopfInstance& h) { return h.antipode.reshaped(TensorShape{h.dim}, TensorShape{h.dim}); }
LinearMap antipode_inverse(const HopfInstance& h) {
  return h.antipode_inverse.reshaped(TensorShape{h.dim}, TensorShape{h.dim});
}
LinearMap coaction(const ComoduleCoalgebraInstance& m) {
  return m.coaction.reshaped(TensorShape{m.coalgebra.dim}, TensorShape{m.hopf.dim, m.coalgebra.dim});
}

LinearMap iterated_coproduct(const CoalgebraInstance& c, std::size_t p) {
  LegProgram prog;
  for (std::size_t k = 0; k < p; ++k) prog.apply(0, comultiplication(c), "comultiply leg 0");
  return prog.compile(c.field, TensorShape{c.dim});
}

LinearMap iterated_coproduct(const HopfInstance& h, std::size_t p) { return iterated_coproduct(h.coalgebra(), p); }

LinearMap iterated_coproduct_right(const CoalgebraInstance& c, std::size_t p) {
  LegProgram prog;
  for (std::size_t k = 0; k < p; ++k) prog.apply(k, comultiplication(c), "comultiply last leg");
  return prog.compile(c.field, TensorShape{c.dim});
}

LinearMap iterated_product(const HopfInstance& h, std::size_t k) {
  if (k == 0) return unit(h);
  LegProgram prog;
  for (std::size_t i = 1; i < k; ++i) prog.apply(0, multiplication(h), "multiply legs 0,1");
  return prog.compile(h.field, TensorShape::power(h.dim, k));
}

LinearMap diagonal_action(const HopfInstance& h, std::size_t p) {
  std::vector<std::string> in{"h"};
  for (std::size_t i = 0; i <= p; ++i) in.push_back("g" + std::to_string(i));
  LegBuilder b(h.field, in, TensorShape::power(h.dim, p + 2));
  std::vector<std::string> parts;
  for (std::size_t i = 0; i <= p; ++i) parts.push_back("h" + std::to_string(i));
  b.apply(iterated_coproduct(h, p), {"h"}, parts, "iterated coproduct of h");
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= p; ++i) {
    const std::string gi = "g" + std::to_string(i);
    b.apply(multiplication(h), {parts[i], gi}, {"x" + gi}, "h(" + std::to_string(i) + ") " + gi);
    out.push_back("x" + gi);
  }
  b.arrange(out);
  return b.compile();
}

LinearMap tensor_coaction(const ComoduleCoalgebraInstance& m, std::size_t q) {
  std::vector<std::string> in, hs, out{"h"};
  for (std::size_t i = 0; i <= q; ++i) in.push_back("a" + std::to_string(i));
  LegBuilder b(m.hopf.field, in, TensorShape::power(m.coalgebra.dim, q + 1));
  const LinearMap rho = coaction(m);
  for (std::size_t i = 0; i <= q; ++i) {
    const std::string a = in[i];
    b.apply(rho, {a}, {"h" + a, a + "'"}, "coaction on " + a);
    hs.push_back("h" + a);
    out.push_back(a + "'");
  }
  b.apply(iterated_product(m.hopf, q + 1), hs, {"h"}, "multiply coaction legs in order");
  b.arrange(out);
  return b.compile();
}

LinearMap iterated_coaction(const ComoduleCoalgebraInstance& m, std::size_t j) {
  if (j == 0) return LinearMap::identity(m.hopf.field, TensorShape{m.coalgebra.dim});
  LegProgram prog;
  prog.apply(0, coaction(m), "coaction");
  for (std::size_t k = 1; k < j; ++k) prog.apply(0, comultiplication(m.hopf), "comultiply leftmost H leg");
  return prog.compile(m.hopf.field, TensorShape{m.coalgebra.dim});
}

}  // namespace hopfcyc
