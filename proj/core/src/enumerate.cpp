#include "genhecke/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace genhecke {

const Rational* SparseVec::find(int i) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const auto& e, int k) { return e.first < k; });
  if (it == entries.end() || it->first != i) return nullptr;
  return &it->second;
}

void SparseVec::scale(const Rational& k) {
  if (k == 0) {
    entries.clear();
    return;
  }
  for (auto& [i, c] : entries) c *= k;
}

SparseVec vec_axpy(const SparseVec& a, const Rational& k, const SparseVec& b) {
  SparseVec out;
  out.entries.reserve(a.entries.size() + b.entries.size());
  auto ia = a.entries.begin(), ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      out.entries.push_back(*ia++);
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      Rational c = k * ib->second;
      if (c != 0) out.entries.emplace_back(ib->first, std::move(c));
      ++ib;
    } else {
      Rational c = ia->second + k * ib->second;
      if (c != 0) out.entries.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseVec vec_add(const SparseVec& a, const SparseVec& b) { return vec_axpy(a, 1, b); }
SparseVec vec_sub(const SparseVec& a, const SparseVec& b) { return vec_axpy(a, -1, b); }

void VecAccum::add(int i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = slots_.emplace(i, c);
  if (!inserted) it->second += c;
}

void VecAccum::add_scaled(const SparseVec& v, const Rational& k) {
  if (k == 0) return;
  for (const auto& [i, c] : v.entries) add(i, k * c);
}

SparseVec VecAccum::take() {
  SparseVec out;
  out.entries.reserve(slots_.size());
  for (auto& [i, c] : slots_)
    if (c != 0) out.entries.emplace_back(i, std::move(c));
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  slots_.clear();
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& pres, const Specialization& spec,
             const EnumerationOptions& opts)
      : pres_(pres), spec_(spec), opts_(opts), frontier_(FrontLess{this}) {
    ngens_ = pres.num_gens();
    policy_ = specialize(pres.window_policy(), spec, ngens_);
    for (int g = 0; g < ngens_; ++g) {
      if (policy_.rule(g).coeffs[0] == 0)
        throw Error(pres.name + ": order constant of " + pres.gens.name(g) +
                    " specializes to 0; not a valid Hecke specialization");
    }
    rels_ = pres.braid_relations;
    if (rels_.size() > 30) throw Error("too many braid relations");
    action_.resize(ngens_);
  }

  EnumerationResult run() {
    if (words_.empty()) intern(Word());
    long since_checkpoint = 0;
    while (true) {
      if (frontier_.empty()) {
        sweep();
        if (frontier_.empty() && pending_.empty()) break;
        // with a total table every pending equation is chaseable, so a
        // leftover here means the invariants broke
        if (frontier_.empty())
          throw Error(pres_.name + ": enumeration stalled with pending equations");
        continue;
      }
      FrontKey key = *frontier_.begin();
      frontier_.erase(frontier_.begin());
      if (!live_[key.word] || action_[key.gen][key.word].has_value()) continue;
      define(key.word, key.gen);
      ++defs_;
      for (int r = 0; r < static_cast<int>(rels_.size()); ++r) impose(key.word, r);
      if (defs_ % opts_.sweep_every == 0) sweep();
      if (!opts_.checkpoint_path.empty() && ++since_checkpoint >= opts_.checkpoint_every) {
        save_checkpoint(opts_.checkpoint_path);
        since_checkpoint = 0;
      }
    }
    // closure reached: table total, no pending equations, every live
    // relation instance verified with zero residual
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (live_[i]) assert(verified_[i] == (1u << rels_.size()) - 1);
    return finish();
  }

  void save_checkpoint(const std::string& path) const;
  void load_checkpoint(const std::string& path);

 private:
  struct FrontKey {
    int len;
    int word;
    int gen;
  };
  struct FrontLess {
    Enumerator* self;
    bool operator()(const FrontKey& a, const FrontKey& b) const {
      if (a.len != b.len) return a.len < b.len;
      if (a.word != b.word) {
        const Word& wa = self->words_[a.word];
        const Word& wb = self->words_[b.word];
        if (wa < wb) return true;
        if (wb < wa) return false;
        return a.word < b.word;  // unreachable for distinct interned words
      }
      return a.gen < b.gen;
    }
  };
  struct Pending {
    SparseVec combo;
    int gen;
    SparseVec rhs;
  };

  int intern(const Word& w) {
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    int len = w.expanded_size();
    if (len > opts_.max_len)
      throw BudgetExceeded(pres_.name + ": word length budget exceeded (max-len " +
                               std::to_string(opts_.max_len) + ")",
                           live_count_, frontier_.size());
    int idx = static_cast<int>(words_.size());
    words_.push_back(w);
    index_.emplace(w, idx);
    live_.push_back(1);
    nf_.emplace_back();
    verified_.push_back(0);
    for (int g = 0; g < ngens_; ++g) {
      action_[g].emplace_back();
      frontier_.insert({len, idx, g});
    }
    ++live_count_;
    max_len_seen_ = std::max(max_len_seen_, len);
    if (live_count_ > opts_.max_dim)
      throw BudgetExceeded(pres_.name + ": dimension budget exceeded (max-dim " +
                               std::to_string(opts_.max_dim) + ")",
                           live_count_, frontier_.size());
    return idx;
  }

  bool fully_live(const SparseVec& v) const {
    for (const auto& [i, c] : v.entries)
      if (!live_[i]) return false;
    return true;
  }

  /// rewrite retired indices until the support is live; path-compresses
  /// the nf_ entries it walks through
  SparseVec normalize(SparseVec v) {
    while (true) {
      int bad = -1;
      for (auto it = v.entries.rbegin(); it != v.entries.rend(); ++it)
        if (!live_[it->first]) {
          bad = it->first;
          break;
        }
      if (bad < 0) return v;
      compress_nf(bad);
      const Rational* c = v.find(bad);
      Rational k = *c;
      VecAccum acc;
      for (const auto& [i, ci] : v.entries)
        if (i != bad) acc.add(i, ci);
      acc.add_scaled(nf_[bad], k);
      v = acc.take();
    }
  }

  void compress_nf(int idx) {
    if (fully_live(nf_[idx])) return;
    // replace the highest retired index repeatedly; supports only reference
    // strictly smaller indices, so this terminates
    nf_[idx] = normalize_nf_body(nf_[idx]);
  }

  SparseVec normalize_nf_body(SparseVec v) {
    while (true) {
      int bad = -1;
      for (auto it = v.entries.rbegin(); it != v.entries.rend(); ++it)
        if (!live_[it->first]) {
          bad = it->first;
          break;
        }
      if (bad < 0) return v;
      const Rational* c = v.find(bad);
      Rational k = *c;
      VecAccum acc;
      for (const auto& [i, ci] : v.entries)
        if (i != bad) acc.add(i, ci);
      acc.add_scaled(nf_[bad], k);  // nf_[bad] may itself contain retired, loop handles it
      v = acc.take();
    }
  }

  /// normalized action row, nullptr when undefined
  const SparseVec* action_row(int g, int i) {
    auto& slot = action_[g][i];
    if (!slot.has_value()) return nullptr;
    if (!fully_live(*slot)) *slot = normalize(std::move(*slot));
    return &*slot;
  }

  void define(int i, int g) {
    Word w = words_[i] * Word::single(g, 1);
    Element<Rational> red = window_reduce(w, Rational(1), policy_);
    VecAccum acc;
    for (const auto& [word, c] : red.terms()) {
      int j = intern(word);
      if (live_[j]) {
        acc.add(j, c);
      } else {
        compress_nf(j);
        acc.add_scaled(nf_[j], c);
      }
    }
    action_[g][i] = acc.take();
  }

  enum class Chase { Ready, NotReady };

  Chase apply_gen(SparseVec& v, int g) {
    VecAccum acc;
    for (const auto& [i, c] : v.entries) {
      const SparseVec* row = action_row(g, i);
      if (!row) return Chase::NotReady;
      acc.add_scaled(*row, c);
    }
    v = acc.take();
    return Chase::Ready;
  }

  Chase chase(SparseVec v, const Word& w, SparseVec& out) {
    for (const Letter& l : w.letters()) {
      assert(l.exp > 0);
      for (int k = 0; k < l.exp; ++k)
        if (apply_gen(v, l.gen) == Chase::NotReady) return Chase::NotReady;
    }
    out = std::move(v);
    return Chase::Ready;
  }

  void coincidence(SparseVec v) {
    v = normalize(std::move(v));
    if (v.empty()) return;
    int h = v.max_index();
    Rational ch = v.entries.back().second;
    v.entries.pop_back();
    v.scale(-1 / ch);
    live_[h] = 0;
    --live_count_;
    nf_[h] = std::move(v);
    int len = words_[h].expanded_size();
    for (int g = 0; g < ngens_; ++g) {
      frontier_.erase({len, h, g});
      if (action_[g][h].has_value()) {
        pending_.push_back({nf_[h], g, std::move(*action_[g][h])});
        action_[g][h].reset();
      }
    }
  }

  /// returns true when a coincidence was processed
  bool impose(int i, int r) {
    if (!live_[i]) return false;
    if (verified_[i] & (1u << r)) return false;
    SparseVec vl, vr;
    if (chase(SparseVec::unit(i), rels_[r].first, vl) == Chase::NotReady) return false;
    if (chase(SparseVec::unit(i), rels_[r].second, vr) == Chase::NotReady) return false;
    verified_[i] |= 1u << r;  // a zero residual stays zero under retirement
    SparseVec residual = vec_sub(vl, vr);
    if (residual.empty()) return false;
    coincidence(std::move(residual));
    return true;
  }

  bool process_pending() {
    bool progress = false;
    std::size_t n = pending_.size();
    for (std::size_t k = 0; k < n; ++k) {
      Pending eq = std::move(pending_.front());
      pending_.pop_front();
      SparseVec combo = normalize(std::move(eq.combo));
      SparseVec val = combo;
      if (apply_gen(val, eq.gen) == Chase::NotReady) {
        pending_.push_back({std::move(combo), eq.gen, std::move(eq.rhs)});
        continue;
      }
      SparseVec rhs = normalize(std::move(eq.rhs));
      SparseVec residual = vec_sub(val, rhs);
      if (!residual.empty()) {
        coincidence(std::move(residual));
        progress = true;
      } else {
        progress = true;  // equation discharged
      }
    }
    return progress;
  }

  void sweep() {
    bool progress = true;
    while (progress) {
      progress = false;
      if (process_pending()) progress = true;
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if (!live_[i]) continue;
        for (int r = 0; r < static_cast<int>(rels_.size()); ++r)
          if (impose(static_cast<int>(i), r)) progress = true;
      }
    }
    if (opts_.log) {
      std::ostringstream msg;
      msg << pres_.name << ": defs=" << defs_ << " words=" << words_.size()
          << " live=" << live_count_ << " frontier=" << frontier_.size();
      opts_.log(msg.str());
    }
  }

  EnumerationResult finish() {
    EnumerationResult result(spec_);
    result.presentation = pres_.name;
    result.dimension = live_count_;
    result.total_words = static_cast<long>(words_.size());
    result.max_len_explored = max_len_seen_;

    std::vector<int> live_ids;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (live_[i]) live_ids.push_back(static_cast<int>(i));
    std::sort(live_ids.begin(), live_ids.end(),
              [&](int a, int b) { return words_[a] < words_[b]; });
    std::vector<int> new_index(words_.size(), -1);
    for (std::size_t k = 0; k < live_ids.size(); ++k) new_index[live_ids[k]] = static_cast<int>(k);

    result.basis.reserve(live_ids.size());
    for (int id : live_ids) result.basis.push_back(words_[id]);

    result.matrices.assign(ngens_, Mat(live_ids.size()));
    for (int g = 0; g < ngens_; ++g) {
      for (std::size_t k = 0; k < live_ids.size(); ++k) {
        const SparseVec* row = action_row(g, live_ids[k]);
        assert(row != nullptr);
        SparseVec out;
        out.entries.reserve(row->size());
        for (const auto& [i, c] : row->entries) out.entries.emplace_back(new_index[i], c);
        std::sort(out.entries.begin(), out.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        result.matrices[g][k] = std::move(out);
      }
    }
    result.order_coeffs.resize(ngens_);
    for (int g = 0; g < ngens_; ++g) result.order_coeffs[g] = policy_.rule(g).coeffs;
    return result;
  }

  const Presentation& pres_;
  Specialization spec_;
  EnumerationOptions opts_;
  WindowPolicy<Rational> policy_;
  int ngens_ = 0;
  std::vector<std::pair<Word, Word>> rels_;

  std::vector<Word> words_;
  std::unordered_map<Word, int, WordHash> index_;
  std::vector<char> live_;
  std::vector<SparseVec> nf_;
  std::vector<std::uint32_t> verified_;
  std::vector<std::vector<std::optional<SparseVec>>> action_;
  std::set<FrontKey, FrontLess> frontier_;
  std::deque<Pending> pending_;
  long defs_ = 0;
  int live_count_ = 0;
  int max_len_seen_ = 0;
};

std::string vec_text(const SparseVec& v) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.entries.size(); ++k) {
    if (k) out << " ";
    out << v.entries[k].first << ":" << v.entries[k].second.get_str();
  }
  return out.str();
}

SparseVec vec_parse(const std::string& text) {
  SparseVec v;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw Error("bad sparse vector entry " + tok);
    v.entries.emplace_back(std::stoi(tok.substr(0, colon)),
                           parse_rational(tok.substr(colon + 1)));
  }
  return v;
}

}  // namespace

void Enumerator::save_checkpoint(const std::string& path) const {
  std::ofstream out(path + ".tmp");
  if (!out) throw Error("cannot write checkpoint " + path);
  out << "genhecke-checkpoint 1\n";
  out << "presentation " << pres_.name << "\n";
  out << "spec " << spec_.str() << "\n";
  out << "defs " << defs_ << "\n";
  out << "maxlen " << max_len_seen_ << "\n";
  out << "words " << words_.size() << "\n";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out << (live_[i] ? "L" : "R") << " " << verified_[i] << " " << words_[i].str(pres_.gens)
        << "\n";
    if (!live_[i]) out << "nf " << vec_text(nf_[i]) << "\n";
    for (int g = 0; g < ngens_; ++g) {
      if (action_[g][i].has_value())
        out << "act " << g << " " << vec_text(*action_[g][i]) << "\n";
    }
  }
  out << "pending " << pending_.size() << "\n";
  for (const auto& eq : pending_) {
    out << "combo " << vec_text(eq.combo) << "\n";
    out << "gen " << eq.gen << "\n";
    out << "rhs " << vec_text(eq.rhs) << "\n";
  }
  out << "end\n";
  out.close();
  std::rename((path + ".tmp").c_str(), path.c_str());
}

void Enumerator::load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open checkpoint " + path);
  std::string line;
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line)) throw Error("truncated checkpoint " + path);
    return line;
  };
  if (next_line() != "genhecke-checkpoint 1") throw Error("bad checkpoint header");
  {
    std::istringstream ls(next_line());
    std::string key, name;
    ls >> key >> name;
    if (key != "presentation" || name != pres_.name)
      throw Error("checkpoint belongs to presentation " + name);
  }
  next_line();  // spec line is informational; the caller passes the same spec
  {
    std::istringstream ls(next_line());
    std::string key;
    ls >> key >> defs_;
  }
  {
    std::istringstream ls(next_line());
    std::string key;
    ls >> key >> max_len_seen_;
  }
  {
    std::istringstream ls(next_line());
    std::string key;
    std::size_t n;
    ls >> key >> n;
    words_.reserve(n);
  }

  words_.clear();
  index_.clear();
  live_.clear();
  nf_.clear();
  verified_.clear();
  for (int g = 0; g < ngens_; ++g) action_[g].clear();
  frontier_.clear();
  pending_.clear();
  live_count_ = 0;

  int cur = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "L" || key == "R") {
      std::uint32_t verified;
      ls >> verified;
      std::string rest;
      std::getline(ls, rest);
      Word w = Word::parse(pres_.gens, rest);
      ++cur;
      words_.push_back(w);
      index_.emplace(w, cur);
      live_.push_back(key == "L" ? 1 : 0);
      verified_.push_back(verified);
      nf_.emplace_back();
      for (int g = 0; g < ngens_; ++g) action_[g].emplace_back();
      if (live_.back()) ++live_count_;
    } else if (key == "nf") {
      std::string rest;
      std::getline(ls, rest);
      nf_[cur] = vec_parse(rest);
    } else if (key == "act") {
      int g;
      ls >> g;
      std::string rest;
      std::getline(ls, rest);
      action_[g][cur] = vec_parse(rest);
    } else if (key == "pending") {
      std::size_t n;
      ls >> n;
      for (std::size_t k = 0; k < n; ++k) {
        Pending eq;
        std::string l1 = next_line();
        eq.combo = vec_parse(l1.substr(6));
        std::istringstream g1(next_line());
        std::string gk;
        g1 >> gk >> eq.gen;
        std::string l3 = next_line();
        eq.rhs = vec_parse(l3.substr(4));
        pending_.push_back(std::move(eq));
      }
    } else if (key == "end") {
      break;
    } else {
      throw Error("bad checkpoint line: " + line);
    }
  }
  // rebuild the frontier from undefined live entries
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!live_[i]) continue;
    int len = words_[i].expanded_size();
    for (int g = 0; g < ngens_; ++g)
      if (!action_[g][i].has_value()) frontier_.insert({len, static_cast<int>(i), g});
  }
}

EnumerationResult enumerate(const Presentation& p, const Specialization& s,
                            const EnumerationOptions& opts) {
  Enumerator e(p, s, opts);
  return e.run();
}

EnumerationResult enumerate_random(const Presentation& p, std::uint64_t seed,
                                   const EnumerationOptions& opts) {
  Specialization s = random_specialization(p.ring, seed);
  EnumerationResult r = enumerate(p, s, opts);
  r.seed = seed;
  return r;
}

EnumerationResult enumerate_resume(const Presentation& p, const std::string& checkpoint,
                                   const EnumerationOptions& opts) {
  std::ifstream in(checkpoint);
  if (!in) throw Error("cannot open checkpoint " + checkpoint);
  std::string header, specline;
  std::getline(in, header);
  std::getline(in, specline);  // "presentation ..."
  std::getline(in, specline);  // "spec a=...,b=..."
  in.close();
  if (specline.rfind("spec ", 0) != 0) throw Error("bad checkpoint spec line");
  std::map<std::string, Rational> values;
  std::istringstream ss(specline.substr(5));
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    values[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  Specialization s = Specialization::from_map(p.ring, values);
  Enumerator e(p, s, opts);
  e.load_checkpoint(checkpoint);
  return e.run();
}

Mat mat_identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m[i] = SparseVec::unit(i);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    VecAccum acc;
    for (const auto& [k, c] : a[i].entries) acc.add_scaled(b[k], c);
    out[i] = acc.take();
  }
  return out;
}

Mat mat_scale(const Mat& a, const Rational& k) {
  Mat out = a;
  for (auto& row : out) row.scale(k);
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = vec_add(a[i], b[i]);
  return out;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool mat_is_identity(const Mat& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].entries.size() != 1) return false;
    if (a[i].entries[0].first != static_cast<int>(i) || a[i].entries[0].second != 1)
      return false;
  }
  return true;
}

namespace {

/// inverse of M_g out of its annihilating polynomial:
/// M^-1 = c0^-1 (M^(o-1) - sum_{i>=1} c_i M^(i-1))
Mat gen_inverse(const EnumerationResult& r, int gen) {
  const auto& coeffs = r.order_coeffs.at(gen);
  int o = static_cast<int>(coeffs.size());
  const Mat& m = r.matrices[gen];
  Mat acc = mat_identity(r.dimension);  // M^(i-1) running power
  Mat inv = mat_scale(acc, -coeffs[1]);
  for (int i = 2; i < o; ++i) {
    acc = mat_mul(acc, m);
    inv = mat_add(inv, mat_scale(acc, -coeffs[i]));
  }
  acc = mat_mul(acc, m);  // M^(o-1)
  inv = mat_add(inv, acc);
  return mat_scale(inv, 1 / coeffs[0]);
}

}  // namespace

Mat eval_word(const EnumerationResult& r, const Word& w) {
  Mat out = mat_identity(r.dimension);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= static_cast<int>(r.matrices.size()))
      throw Error("word uses a generator outside the result");
    Mat base = l.exp > 0 ? r.matrices[l.gen] : gen_inverse(r, l.gen);
    int n = l.exp > 0 ? l.exp : -l.exp;
    for (int k = 0; k < n; ++k) out = mat_mul(out, base);
  }
  return out;
}

SparseVec apply_letter(const EnumerationResult& r, const SparseVec& v, int gen, int sign) {
  if (sign > 0) {
    VecAccum acc;
    for (const auto& [i, c] : v.entries) acc.add_scaled(r.matrices[gen][i], c);
    return acc.take();
  }
  // v * M^-1 via the annihilating polynomial, using vector-matrix products only
  const auto& coeffs = r.order_coeffs.at(gen);
  int o = static_cast<int>(coeffs.size());
  SparseVec power = v;  // v * M^(i-1)
  SparseVec acc = power;
  acc.scale(-coeffs[1]);
  for (int i = 2; i < o; ++i) {
    power = apply_letter(r, power, gen, +1);
    acc = vec_axpy(acc, -coeffs[i], power);
  }
  power = apply_letter(r, power, gen, +1);  // v * M^(o-1)
  acc = vec_add(acc, power);
  acc.scale(1 / coeffs[0]);
  return acc;
}

SparseVec word_coordinates(const EnumerationResult& r, const Word& w) {
  if (r.basis.empty() || !r.basis[0].empty())
    throw Error("result basis does not start with the identity word");
  SparseVec v = SparseVec::unit(0);
  for (const Letter& l : w.letters()) {
    int sign = l.exp > 0 ? 1 : -1;
    for (int k = 0; k < sign * l.exp; ++k) v = apply_letter(r, v, l.gen, sign);
  }
  return v;
}

VerifyCertificate verify_result(const EnumerationResult& r, const Presentation& p) {
  VerifyCertificate cert;
  if (static_cast<int>(r.matrices.size()) != p.num_gens()) {
    cert.message = "generator count mismatch";
    return cert;
  }
  for (const auto& [lhs, rhs] : p.braid_relations) {
    Mat a = eval_word(r, lhs);
    Mat b = eval_word(r, rhs);
    ++cert.identities_checked;
    if (!mat_equal(a, b)) {
      cert.message = "braid relation " + lhs.str(p.gens) + " = " + rhs.str(p.gens) +
                     " fails as a matrix identity";
      return cert;
    }
  }
  for (int g = 0; g < p.num_gens(); ++g) {
    const auto& rule = p.order_rules[g];
    const auto& coeffs = r.order_coeffs.at(g);
    if (static_cast<int>(coeffs.size()) != rule.order) {
      cert.message = "order coefficient arity mismatch";
      return cert;
    }
    for (int i = 0; i < rule.order; ++i) {
      if (r.spec(rule.coeffs[i]) != coeffs[i]) {
        cert.message = "stored order coefficients disagree with the specialization";
        return cert;
      }
    }
    // sigma^o - sum c_i sigma^i must vanish
    Mat power = mat_identity(r.dimension);
    Mat acc = mat_scale(power, -coeffs[0]);
    for (int i = 1; i < rule.order; ++i) {
      power = mat_mul(power, r.matrices[g]);
      acc = mat_add(acc, mat_scale(power, -coeffs[i]));
    }
    power = mat_mul(power, r.matrices[g]);
    acc = mat_add(acc, power);
    ++cert.identities_checked;
    for (const auto& row : acc) {
      if (!row.empty()) {
        cert.message = "order relation of " + p.gens.name(g) + " does not annihilate";
        return cert;
      }
    }
    // invertibility: M * (c0^-1 (M^(o-1) - sum_{i>=1} c_i M^(i-1))) = 1
    if (coeffs[0] == 0) {
      cert.message = "order constant is zero, generator matrix not invertible";
      return cert;
    }
    Mat inv = gen_inverse(r, g);
    ++cert.identities_checked;
    if (!mat_is_identity(mat_mul(r.matrices[g], inv))) {
      cert.message = "generator inverse check failed for " + p.gens.name(g);
      return cert;
    }
  }
  cert.ok = true;
  cert.message = "all matrix identities hold";
  return cert;
}

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_of(const mpz_class& z) {
  std::uint64_t m = mpz_fdiv_ui(z.get_mpz_t(), kPrime);
  return m;
}

/// row image mod p; false when a denominator vanishes mod p
bool row_mod(const SparseVec& row, int dim, std::vector<std::uint64_t>& out) {
  out.assign(dim, 0);
  for (const auto& [i, q] : row.entries) {
    // mpz_fdiv_ui folds the numerator's sign into the residue
    std::uint64_t num = mod_of(q.get_num());
    std::uint64_t den = mod_of(q.get_den());
    if (den == 0) return false;
    out[i] = mulmod(num, powmod(den, kPrime - 2));
  }
  return true;
}

}  // namespace

RankCertificate row_rank(const std::vector<SparseVec>& rows, int dim) {
  RankCertificate cert;
  cert.rows = static_cast<int>(rows.size());

  // modular greedy elimination first: full rank mod p proves full rank over Q
  {
    std::vector<std::vector<std::uint64_t>> echelon;  // reduced pivot rows
    std::vector<int> pivot_col;
    bool mod_ok = true;
    std::vector<int> independent;
    int first_dependent = -1;
    std::vector<std::uint64_t> work;
    for (std::size_t r = 0; r < rows.size() && mod_ok; ++r) {
      if (!row_mod(rows[r], dim, work)) {
        mod_ok = false;
        break;
      }
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        std::uint64_t c = work[pivot_col[e]];
        if (c == 0) continue;
        std::uint64_t k = kPrime - c;
        const auto& base = echelon[e];
        for (int i = 0; i < dim; ++i)
          if (base[i]) work[i] = (work[i] + mulmod(k, base[i])) % kPrime;
      }
      int lead = -1;
      for (int i = 0; i < dim; ++i)
        if (work[i]) {
          lead = i;
          break;
        }
      if (lead < 0) {
        if (first_dependent < 0) first_dependent = static_cast<int>(r);
        continue;
      }
      std::uint64_t inv = powmod(work[lead], kPrime - 2);
      for (int i = 0; i < dim; ++i) work[i] = mulmod(work[i], inv);
      echelon.push_back(work);
      pivot_col.push_back(lead);
      independent.push_back(static_cast<int>(r));
    }
    if (mod_ok && static_cast<int>(echelon.size()) == dim) {
      cert.full = true;
      cert.rank = dim;
      cert.independent = std::move(independent);
      cert.first_dependent = first_dependent;
      cert.method = "modular";
      return cert;
    }
  }

  // exact rational elimination (authoritative rank and dependency report)
  std::vector<SparseVec> echelon;
  std::vector<int> pivot_col;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseVec work = rows[r];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational* c = work.find(pivot_col[e]);
      if (!c) continue;
      work = vec_axpy(work, -*c, echelon[e]);
    }
    if (work.empty()) {
      if (cert.first_dependent < 0) cert.first_dependent = static_cast<int>(r);
      continue;
    }
    Rational lead = work.entries.front().second;
    work.scale(1 / lead);
    pivot_col.push_back(work.entries.front().first);
    echelon.push_back(std::move(work));
    cert.independent.push_back(static_cast<int>(r));
  }
  cert.rank = static_cast<int>(echelon.size());
  cert.full = cert.rank == dim;
  cert.method = "exact";
  return cert;
}

SpanningCertificate certify_spanning(const std::vector<Word>& words,
                                     const EnumerationResult& r) {
  SpanningCertificate cert;
  cert.dimension = r.dimension;
  std::vector<SparseVec> rows;
  rows.reserve(words.size());
  for (const Word& w : words) {
    rows.push_back(word_coordinates(r, w));
    if (w.empty()) cert.contains_identity = true;
  }
  RankCertificate rank = row_rank(rows, r.dimension);
  cert.rank = rank.full ? r.dimension : rank.rank;
  cert.first_dependent = rank.first_dependent;
  cert.independent = std::move(rank.independent);
  cert.ok = rank.full;
  if (cert.ok) {
    cert.message = "rank " + std::to_string(cert.rank) + " of " +
                   std::to_string(words.size()) + " words certifies spanning (" +
                   rank.method + " elimination)";
  } else {
    cert.message = "rank deficit: rank " + std::to_string(cert.rank) + " < dimension " +
                   std::to_string(r.dimension) + ", first dependent word index " +
                   std::to_string(rank.first_dependent);
  }
  return cert;
}

std::string result_to_text(const EnumerationResult& r) {
  std::ostringstream out;
  out << "genhecke-result 1\n";
  out << "presentation " << r.presentation << "\n";
  out << "dimension " << r.dimension << "\n";
  out << "spec " << r.spec.str() << "\n";
  out << "seed " << (r.seed ? std::to_string(*r.seed) : "-") << "\n";
  out << "maxlen " << r.max_len_explored << "\n";
  out << "totalwords " << r.total_words << "\n";
  out << "gens " << r.matrices.size() << "\n";
  out << "basis\n";
  // words are written with generator ids, names belong to the presentation
  for (const auto& w : r.basis) {
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
      if (i) out << " ";
      out << w.letters()[i].gen << "^" << w.letters()[i].exp;
    }
    out << "\n";
  }
  for (std::size_t g = 0; g < r.matrices.size(); ++g) {
    out << "matrix " << g << "\n";
    for (const auto& row : r.matrices[g]) out << vec_text(row) << "\n";
    out << "order";
    for (const auto& c : r.order_coeffs[g]) out << " " << c.get_str();
    out << "\n";
  }
  return out.str();
}

}  // namespace genhecke
