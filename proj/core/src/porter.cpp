#include <string>

#include "qfs/text.hpp"

// Porter stemming algorithm, original 1980 rule tables (no later
// departures). The buffer/index scheme follows the classic reference
// implementation: k is the last live character, j marks the stem end set by
// ends().

namespace qfs {

namespace {

class Porter {
 public:
  explicit Porter(std::string word) : b_(std::move(word)), k_(static_cast<int>(b_.size()) - 1) {}

  std::string run() {
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_.substr(0, static_cast<std::size_t>(k_) + 1);
  }

 private:
  bool cons(int i) const {
    switch (b_[static_cast<std::size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of vowel-consonant sequences in b[0..j].
  int measure() const {
    int m = 0;
    int i = 0;
    while (true) {
      if (i > j_) return m;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return m;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++m;
      while (true) {
        if (i > j_) return m;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool double_consonant(int i) const {
    if (i < 1) return false;
    if (b_[static_cast<std::size_t>(i)] != b_[static_cast<std::size_t>(i - 1)]) return false;
    return cons(i);
  }

  // b[i-2..i] is consonant-vowel-consonant and the final consonant is not
  // w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b_[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(const char* s) {
    int len = static_cast<int>(std::char_traits<char>::length(s));
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<std::size_t>(k_ - len + 1), static_cast<std::size_t>(len), s) != 0)
      return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(const char* s) {
    int len = static_cast<int>(std::char_traits<char>::length(s));
    b_.replace(static_cast<std::size_t>(j_ + 1), b_.size() - static_cast<std::size_t>(j_ + 1), s);
    k_ = j_ + len;
  }

  void replace_if_stem(const char* s) {
    if (measure() > 0) set_to(s);
  }

  void step1ab() {
    if (b_[static_cast<std::size_t>(k_)] == 's') {
      if (ends("sses"))
        k_ -= 2;
      else if (ends("ies"))
        set_to("i");
      else if (b_[static_cast<std::size_t>(k_ - 1)] != 's')
        --k_;
    }
    if (ends("eed")) {
      if (measure() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at"))
        set_to("ate");
      else if (ends("bl"))
        set_to("ble");
      else if (ends("iz"))
        set_to("ize");
      else if (double_consonant(k_)) {
        --k_;
        char ch = b_[static_cast<std::size_t>(k_)];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (measure() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  void step2() {
    if (k_ < 1) return;
    switch (b_[static_cast<std::size_t>(k_ - 1)]) {
      case 'a':
        if (ends("ational")) {
          replace_if_stem("ate");
          break;
        }
        if (ends("tional")) replace_if_stem("tion");
        break;
      case 'c':
        if (ends("enci")) {
          replace_if_stem("ence");
          break;
        }
        if (ends("anci")) replace_if_stem("ance");
        break;
      case 'e':
        if (ends("izer")) replace_if_stem("ize");
        break;
      case 'l':
        if (ends("entli")) {
          replace_if_stem("ent");
          break;
        }
        if (ends("ousli")) {
          replace_if_stem("ous");
          break;
        }
        if (ends("abli")) {
          replace_if_stem("able");
          break;
        }
        if (ends("alli")) {
          replace_if_stem("al");
          break;
        }
        if (ends("eli")) replace_if_stem("e");
        break;
      case 'o':
        if (ends("ization")) {
          replace_if_stem("ize");
          break;
        }
        if (ends("ation")) {
          replace_if_stem("ate");
          break;
        }
        if (ends("ator")) replace_if_stem("ate");
        break;
      case 's':
        if (ends("iveness")) {
          replace_if_stem("ive");
          break;
        }
        if (ends("fulness")) {
          replace_if_stem("ful");
          break;
        }
        if (ends("ousness")) {
          replace_if_stem("ous");
          break;
        }
        if (ends("alism")) replace_if_stem("al");
        break;
      case 't':
        if (ends("aliti")) {
          replace_if_stem("al");
          break;
        }
        if (ends("iviti")) {
          replace_if_stem("ive");
          break;
        }
        if (ends("biliti")) replace_if_stem("ble");
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (b_[static_cast<std::size_t>(k_)]) {
      case 'e':
        if (ends("icate")) {
          replace_if_stem("ic");
          break;
        }
        if (ends("ative")) {
          replace_if_stem("");
          break;
        }
        if (ends("alize")) replace_if_stem("al");
        break;
      case 'i':
        if (ends("iciti")) replace_if_stem("ic");
        break;
      case 'l':
        if (ends("ical")) {
          replace_if_stem("ic");
          break;
        }
        if (ends("ful")) replace_if_stem("");
        break;
      case 's':
        if (ends("ness")) replace_if_stem("");
        break;
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    switch (b_[static_cast<std::size_t>(k_ - 1)]) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 0 &&
            (b_[static_cast<std::size_t>(j_)] == 's' || b_[static_cast<std::size_t>(j_)] == 't'))
          break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (measure() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (b_[static_cast<std::size_t>(k_)] == 'e') {
      int m = measure();
      if (m > 1 || (m == 1 && !cvc(k_ - 1))) --k_;
    }
    if (b_[static_cast<std::size_t>(k_)] == 'l' && double_consonant(k_) && measure() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

}  // namespace

std::string stem(const std::string& token) {
  if (token.size() <= 2) return token;
  for (char c : token)
    if (c < 'a' || c > 'z') return token;
  return Porter(token).run();
}

}  // namespace qfs
