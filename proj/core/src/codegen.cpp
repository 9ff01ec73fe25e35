#include "instrseq/codegen.hpp"

#include <map>
#include <set>
#include <tuple>

#include "instrseq/error.hpp"

namespace instrseq {
namespace {

Instruction signed_jump(std::int64_t displacement) {
  return displacement > 0 ? Instruction::jump(static_cast<Counter>(displacement))
                          : Instruction::jump(static_cast<Counter>(-displacement), Orientation::Backward);
}

EncoderOutput encode(const LinearSpec& spec, bool c_minus) {
  // Block order: root first, then the other states in index order.
  std::vector<StateId> order{spec.root()};
  for (StateId s = 0; s < spec.size(); ++s) {
    if (s != spec.root()) order.push_back(s);
  }
  std::vector<std::int64_t> index(spec.size());  // 1-based block index
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<std::int64_t>(i) + 1;

  std::vector<Instruction> out;
  out.reserve(3 * spec.size());
  for (StateId s : order) {
    const auto& eq = spec.state(s);
    switch (eq.kind) {
      case Equation::Kind::S:
        out.push_back(Instruction::halt());
        if (c_minus) {
          out.push_back(Instruction::jump(1));
          out.push_back(Instruction::jump(1, Orientation::Backward));
        } else {
          out.insert(out.end(), 2, Instruction::abort());
        }
        break;
      case Equation::Kind::D:
        if (c_minus) {
          out.push_back(Instruction::jump(1));
          out.push_back(Instruction::jump(1));
          out.push_back(Instruction::jump(1, Orientation::Backward));
        } else {
          out.insert(out.end(), 3, Instruction::abort());
        }
        break;
      case Equation::Kind::Post: {
        // The test sits at 3i-2; its true branch continues at 3i-1 and must
        // reach 3j-2, its false branch continues at 3i and must reach 3k-2.
        const std::int64_t i = index[s];
        const std::int64_t p = 3 * (index[eq.on_true] - i) - 1;
        const std::int64_t q = 3 * (index[eq.on_false] - i) - 2;
        out.push_back(Instruction::pos_test(eq.action));
        out.push_back(signed_jump(p));
        out.push_back(signed_jump(q));
        break;
      }
    }
  }
  std::vector<Position> block_of(spec.size());
  for (StateId s = 0; s < spec.size(); ++s) block_of[s] = 3 * (index[s] - 1) + 1;
  return {CodeSeq(std::move(out)), std::move(block_of)};
}

}  // namespace

EncoderOutput spec_to_code(const LinearSpec& spec) { return encode(spec, false); }

EncoderOutput spec_to_code_cminus(const LinearSpec& spec) { return encode(spec, true); }

LinearSpec spec_from_finite(const FiniteThread& t) {
  // Hash-cons subterms bottom-up; equal subterms get the same state.
  using Key = std::tuple<int, std::string, StateId, StateId>;
  std::map<Key, StateId> ids;
  std::vector<Equation> eqs;
  auto go = [&](auto& self, const FiniteThread& u) -> StateId {
    Key key;
    Equation eq;
    switch (u.kind()) {
      case FiniteThread::Kind::S:
        key = {0, {}, 0, 0};
        eq = Equation::terminate();
        break;
      case FiniteThread::Kind::D:
        key = {1, {}, 0, 0};
        eq = Equation::deadlock();
        break;
      case FiniteThread::Kind::Post: {
        StateId t_id = self(self, u.on_true());
        StateId f_id = self(self, u.on_false());
        key = {2, u.action().name(), t_id, f_id};
        eq = Equation::post(u.action(), t_id, f_id);
        break;
      }
    }
    auto [it, fresh] = ids.emplace(key, eqs.size());
    if (fresh) eqs.push_back(std::move(eq));
    return it->second;
  };
  StateId root = go(go, t);
  return restrict_to_reachable(LinearSpec(std::move(eqs), root));
}

LinearSpec pf_thread(std::size_t n, const std::vector<std::size_t>& f, const Action& a) {
  if (n == 0) throw PreconditionError("P^F threads need n >= 1");
  if (f.size() != n - 1) throw PreconditionError("F must be defined on exactly 1..n-1");
  std::vector<Equation> eqs;
  eqs.reserve(n);
  eqs.push_back(Equation::terminate());
  for (std::size_t i = 1; i < n; ++i) {
    if (f[i - 1] >= n) throw PreconditionError("F(" + std::to_string(i) + ") out of range 0..n-1");
    eqs.push_back(Equation::post(a, f[i - 1], i - 1));
  }
  return LinearSpec(std::move(eqs), n - 1);
}

PsiReport psi_experiment(std::size_t n, std::uint64_t cap) {
  if (n == 0) throw PreconditionError("psi experiment needs n >= 1");
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (total > cap / n) throw PreconditionError("n^(n-1) exceeds the enumeration cap");
    total *= n;
  }

  PsiReport report;
  report.n = n;
  report.expected_distinct = total;
  report.lengths.reserve(total);
  std::set<std::string> distinct;
  std::vector<std::size_t> f(n - 1, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    LinearSpec thread = pf_thread(n, f);
    std::size_t len = spec_to_code(thread).code.size();
    report.lengths.push_back(len);
    report.max_length = std::max(report.max_length, len);
    distinct.insert(to_json(minimize(thread)));
    // Lexicographic successor of F, last argument varying fastest.
    for (std::size_t i = f.size(); i-- > 0;) {
      if (++f[i] < n) break;
      f[i] = 0;
    }
  }
  report.distinct_count = distinct.size();
  return report;
}

}  // namespace instrseq
