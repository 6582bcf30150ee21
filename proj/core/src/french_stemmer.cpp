#include "tmmatch/french_stemmer.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>

#include "tmmatch/unicode.hpp"

namespace tmmatch {

namespace {

using Word = std::u32string;
using Suffixes = std::initializer_list<std::u32string_view>;

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
    case U'â': case U'à': case U'ë': case U'é': case U'ê': case U'è':
    case U'ï': case U'î': case U'ô': case U'û': case U'ù':
      return true;
    default:
      return false;
  }
}

class Stemmer {
 public:
  explicit Stemmer(Word w) : w_(std::move(w)) {}

  Word run() {
    prelude();
    mark_regions();

    bool changed_by_suffix = false;
    if (standard_suffix() || i_verb_suffix() || verb_suffix()) {
      changed_by_suffix = true;
    }
    if (changed_by_suffix) {
      if (ends_with(U"Y")) {
        w_.back() = U'i';
      } else if (ends_with(U"ç")) {
        w_.back() = U'c';
      }
    } else {
      residual_suffix();
    }
    un_double();
    un_accent();
    postlude();
    return std::move(w_);
  }

 private:
  Word w_;
  std::size_t rv_ = 0;
  std::size_t r1_ = 0;
  std::size_t r2_ = 0;

  std::size_t size() const { return w_.size(); }

  bool ends_with(std::u32string_view s) const {
    return w_.size() >= s.size() && std::u32string_view(w_).substr(w_.size() - s.size()) == s;
  }
  // True when `s` occurs immediately before position `end`.
  bool ends_at(std::size_t end, std::u32string_view s) const {
    return end >= s.size() && std::u32string_view(w_).substr(end - s.size(), s.size()) == s;
  }

  // Longest suffix from `list` whose start is at or after `limit`.
  std::optional<std::u32string_view> longest(Suffixes list, std::size_t limit = 0) const {
    std::optional<std::u32string_view> best;
    for (auto s : list) {
      if (!ends_with(s) || size() - s.size() < limit) continue;
      if (!best || s.size() > best->size()) best = s;
    }
    return best;
  }

  std::size_t start_of(std::u32string_view suffix) const { return size() - suffix.size(); }
  void drop(std::size_t n) { w_.erase(w_.size() - n); }
  void replace(std::size_t n, std::u32string_view with) {
    drop(n);
    w_.append(with);
  }

  void prelude() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const char32_t c = w_[i];
      const bool prev_vowel = i > 0 && is_vowel(w_[i - 1]);
      const bool next_vowel = i + 1 < w_.size() && is_vowel(w_[i + 1]);
      if (prev_vowel && c == U'u' && next_vowel) {
        w_[i] = U'U';
      } else if (prev_vowel && c == U'i' && next_vowel) {
        w_[i] = U'I';
      } else if (prev_vowel && c == U'y') {
        w_[i] = U'Y';
      } else if (c == U'y' && next_vowel) {
        w_[i] = U'Y';
      } else if (i > 0 && w_[i - 1] == U'q' && c == U'u') {
        w_[i] = U'U';
      }
    }
  }

  // Position just past the first vowel-then-consonant pair at or after `from`.
  std::size_t region_after(std::size_t from) const {
    std::size_t i = from;
    while (i < size() && !is_vowel(w_[i])) ++i;
    if (i >= size()) return size();
    ++i;
    while (i < size() && is_vowel(w_[i])) ++i;
    if (i >= size()) return size();
    return i + 1;
  }

  void mark_regions() {
    const std::u32string_view v(w_);
    if (size() >= 3 && is_vowel(w_[0]) && is_vowel(w_[1])) {
      rv_ = 3;
    } else if (v.starts_with(U"par") || v.starts_with(U"col") || v.starts_with(U"tap")) {
      rv_ = 3;
    } else {
      rv_ = size();
      for (std::size_t i = 1; i < size(); ++i) {
        if (is_vowel(w_[i])) {
          rv_ = i + 1;
          break;
        }
      }
    }
    r1_ = region_after(0);
    r2_ = region_after(r1_);
  }

  bool in_r1(std::size_t pos) const { return pos >= r1_; }
  bool in_r2(std::size_t pos) const { return pos >= r2_; }
  bool in_rv(std::size_t pos) const { return pos >= rv_; }

  // Returns true when the word was changed and the step counts as a success.
  bool standard_suffix() {
    const auto s = longest({U"ance", U"iqUe", U"isme", U"able", U"iste", U"eux", U"ances", U"iqUes",
                            U"ismes", U"ables", U"istes", U"atrice", U"ateur", U"ation", U"atrices",
                            U"ateurs", U"ations", U"logie", U"logies", U"usion", U"ution", U"usions",
                            U"utions", U"ence", U"ences", U"ement", U"ements", U"ité", U"ités", U"if",
                            U"ive", U"ifs", U"ives", U"eaux", U"aux", U"euse", U"euses", U"issement",
                            U"issements", U"amment", U"emment", U"ment", U"ments"});
    if (!s) return false;
    const std::u32string_view suf = *s;
    const std::size_t at = start_of(suf);
    const auto any_of = [&](Suffixes list) {
      return std::find(list.begin(), list.end(), suf) != list.end();
    };

    if (any_of({U"ance", U"iqUe", U"isme", U"able", U"iste", U"eux", U"ances", U"iqUes", U"ismes",
                U"ables", U"istes"})) {
      if (!in_r2(at)) return false;
      drop(suf.size());
      return true;
    }
    if (any_of({U"atrice", U"ateur", U"ation", U"atrices", U"ateurs", U"ations"})) {
      if (!in_r2(at)) return false;
      drop(suf.size());
      if (ends_with(U"ic")) {
        if (in_r2(size() - 2)) {
          drop(2);
        } else {
          replace(2, U"iqU");
        }
      }
      return true;
    }
    if (any_of({U"logie", U"logies"})) {
      if (!in_r2(at)) return false;
      replace(suf.size(), U"log");
      return true;
    }
    if (any_of({U"usion", U"ution", U"usions", U"utions"})) {
      if (!in_r2(at)) return false;
      replace(suf.size(), U"u");
      return true;
    }
    if (any_of({U"ence", U"ences"})) {
      if (!in_r2(at)) return false;
      replace(suf.size(), U"ent");
      return true;
    }
    if (any_of({U"ement", U"ements"})) {
      if (!in_rv(at)) return false;
      drop(suf.size());
      if (const auto p = longest({U"iv", U"eus", U"abl", U"iqU", U"ièr", U"Ièr"})) {
        const std::size_t pat = start_of(*p);
        if (*p == U"iv") {
          if (in_r2(pat)) {
            drop(2);
            if (ends_with(U"at") && in_r2(size() - 2)) drop(2);
          }
        } else if (*p == U"eus") {
          if (in_r2(pat)) {
            drop(3);
          } else if (in_r1(pat)) {
            replace(3, U"eux");
          }
        } else if (*p == U"abl" || *p == U"iqU") {
          if (in_r2(pat)) drop(3);
        } else if (in_rv(pat)) {
          replace(3, U"i");
        }
      }
      return true;
    }
    if (any_of({U"ité", U"ités"})) {
      if (!in_r2(at)) return false;
      drop(suf.size());
      if (const auto p = longest({U"abil", U"ic", U"iv"})) {
        const std::size_t pat = start_of(*p);
        if (*p == U"abil") {
          if (in_r2(pat)) {
            drop(4);
          } else {
            replace(4, U"abl");
          }
        } else if (*p == U"ic") {
          if (in_r2(pat)) {
            drop(2);
          } else {
            replace(2, U"iqU");
          }
        } else if (in_r2(pat)) {
          drop(2);
        }
      }
      return true;
    }
    if (any_of({U"if", U"ive", U"ifs", U"ives"})) {
      if (!in_r2(at)) return false;
      drop(suf.size());
      if (ends_with(U"at") && in_r2(size() - 2)) {
        drop(2);
        if (ends_with(U"ic")) {
          if (in_r2(size() - 2)) {
            drop(2);
          } else {
            replace(2, U"iqU");
          }
        }
      }
      return true;
    }
    if (suf == U"eaux") {
      replace(4, U"eau");
      return true;
    }
    if (suf == U"aux") {
      if (!in_r1(at)) return false;
      replace(3, U"al");
      return true;
    }
    if (any_of({U"euse", U"euses"})) {
      if (in_r2(at)) {
        drop(suf.size());
        return true;
      }
      if (in_r1(at)) {
        replace(suf.size(), U"eux");
        return true;
      }
      return false;
    }
    if (any_of({U"issement", U"issements"})) {
      if (!in_r1(at) || at == 0 || is_vowel(w_[at - 1])) return false;
      drop(suf.size());
      return true;
    }
    // The remaining adverbial endings modify the word but report failure so
    // that the verb steps still run.
    if (suf == U"amment") {
      if (in_rv(at)) replace(6, U"ant");
      return false;
    }
    if (suf == U"emment") {
      if (in_rv(at)) replace(6, U"ent");
      return false;
    }
    if (at > 0 && is_vowel(w_[at - 1]) && in_rv(at - 1)) drop(suf.size());
    return false;
  }

  bool i_verb_suffix() {
    const auto s = longest({U"îmes", U"ît", U"îtes", U"i", U"ie", U"ies", U"ir", U"ira", U"irai",
                            U"iraIent", U"irais", U"irait", U"iras", U"irent", U"irez", U"iriez",
                            U"irions", U"irons", U"iront", U"is", U"issaIent", U"issais", U"issait",
                            U"issant", U"issante", U"issantes", U"issants", U"isse", U"issent",
                            U"isses", U"issez", U"issiez", U"issions", U"issons", U"it"},
                           rv_);
    if (!s) return false;
    const std::size_t at = start_of(*s);
    if (at == 0 || !in_rv(at - 1) || is_vowel(w_[at - 1])) return false;
    drop(s->size());
    return true;
  }

  bool verb_suffix() {
    const auto s = longest({U"ions", U"é", U"ée", U"ées", U"és", U"èrent", U"er", U"era", U"erai",
                            U"eraIent", U"erais", U"erait", U"eras", U"erez", U"eriez", U"erions",
                            U"erons", U"eront", U"ez", U"iez", U"âmes", U"ât", U"âtes", U"a", U"ai",
                            U"aIent", U"ais", U"ait", U"ant", U"ante", U"antes", U"ants", U"as",
                            U"asse", U"assent", U"asses", U"assiez", U"assions"},
                           rv_);
    if (!s) return false;
    const std::u32string_view suf = *s;
    const std::size_t at = start_of(suf);
    if (suf == U"ions") {
      if (!in_r2(at)) return false;
      drop(4);
      return true;
    }
    const bool a_group = suf.front() == U'a' || suf.front() == U'â';
    drop(suf.size());
    if (a_group && ends_with(U"e") && in_rv(size() - 1)) drop(1);
    return true;
  }

  void residual_suffix() {
    if (ends_with(U"s") && size() >= 2) {
      switch (w_[size() - 2]) {
        case U'a': case U'i': case U'o': case U'u': case U'è': case U's':
          break;
        default:
          drop(1);
      }
    }
    const auto s = longest({U"ion", U"ier", U"ière", U"Ier", U"Ière", U"e", U"ë"}, rv_);
    if (!s) return;
    const std::u32string_view suf = *s;
    const std::size_t at = start_of(suf);
    if (suf == U"ion") {
      if (in_r2(at) && at > 0 && in_rv(at - 1) && (w_[at - 1] == U's' || w_[at - 1] == U't')) drop(3);
    } else if (suf == U"e") {
      drop(1);
    } else if (suf == U"ë") {
      if (ends_at(at, U"gu")) drop(1);
    } else {
      replace(suf.size(), U"i");
    }
  }

  void un_double() {
    if (ends_with(U"enn") || ends_with(U"onn") || ends_with(U"ett") || ends_with(U"ell") ||
        ends_with(U"eill")) {
      drop(1);
    }
  }

  void un_accent() {
    std::size_t i = size();
    while (i > 0 && !is_vowel(w_[i - 1])) --i;
    if (i == size() || i == 0) return;
    if (w_[i - 1] == U'é' || w_[i - 1] == U'è') w_[i - 1] = U'e';
  }

  void postlude() {
    for (char32_t& c : w_) {
      if (c == U'I') c = U'i';
      else if (c == U'U') c = U'u';
      else if (c == U'Y') c = U'y';
    }
  }
};

}  // namespace

std::string french_stem_once(std::string_view word) {
  return unicode::encode(Stemmer(unicode::decode(word)).run());
}

std::string french_stem(std::string_view word) {
  std::u32string current = unicode::decode(word);
  // Every pass either shortens the word or leaves it unchanged in practice;
  // the cap only guards against a pathological cycle.
  for (int pass = 0; pass < 16; ++pass) {
    std::u32string next = Stemmer(current).run();
    if (next == current) break;
    current = std::move(next);
  }
  return unicode::encode(current);
}

}  // namespace tmmatch
