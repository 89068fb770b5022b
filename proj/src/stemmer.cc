// Copyright 2026 The Veridict Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "veridict/stemmer.h"

#include <algorithm>

namespace veridict::text {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string word) : b_(std::move(word)) {}

  std::string Run() {
    if (b_.size() <= 2) return b_;
    Step1ab();
    Step1c();
    Step2();
    Step3();
    Step4();
    Step5();
    return b_;
  }

 private:
  bool Cons(size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !Cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, j_].
  int M() const {
    int n = 0;
    size_t i = 0;
    while (true) {
      if (i >= j_) return n;
      if (!Cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i >= j_) return n;
        if (Cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i >= j_) return n;
        if (!Cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (size_t i = 0; i < j_; ++i) {
      if (!Cons(i)) return true;
    }
    return false;
  }

  bool DoubleC(size_t i) const {
    if (i < 1) return false;
    if (b_[i] != b_[i - 1]) return false;
    return Cons(i);
  }

  // cvc where the last c is not w, x or y.
  bool Cvc(size_t i) const {
    if (i < 2 || !Cons(i) || Cons(i - 1) || !Cons(i - 2)) return false;
    char ch = b_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  // If b_ ends with s, sets j_ to the stem length and returns true.
  bool Ends(std::string_view s) {
    if (s.size() > b_.size()) return false;
    if (b_.compare(b_.size() - s.size(), s.size(), s) != 0) return false;
    j_ = b_.size() - s.size();
    return true;
  }

  void SetTo(std::string_view s) { b_.replace(j_, b_.size() - j_, s); }

  void R(std::string_view s) {
    if (M() > 0) SetTo(s);
  }

  void Step1ab() {
    if (b_.back() == 's') {
      if (Ends("sses")) {
        b_.resize(b_.size() - 2);
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (b_.size() >= 2 && b_[b_.size() - 2] != 's') {
        b_.pop_back();
      }
    }
    if (Ends("eed")) {
      if (M() > 0) b_.pop_back();
    } else if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      b_.resize(j_);
      j_ = b_.size();
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleC(b_.size() - 1)) {
        char ch = b_.back();
        if (ch != 'l' && ch != 's' && ch != 'z') b_.pop_back();
      } else {
        j_ = b_.size();
        if (M() == 1 && Cvc(b_.size() - 1)) b_ += 'e';
      }
    }
  }

  void Step1c() {
    if (Ends("y") && VowelInStem()) b_.back() = 'i';
  }

  void Step2() {
    if (b_.size() < 2) return;
    switch (b_[b_.size() - 2]) {
      case 'a':
        if (Ends("ational")) { R("ate"); break; }
        if (Ends("tional")) { R("tion"); break; }
        break;
      case 'c':
        if (Ends("enci")) { R("ence"); break; }
        if (Ends("anci")) { R("ance"); break; }
        break;
      case 'e':
        if (Ends("izer")) { R("ize"); break; }
        break;
      case 'l':
        if (Ends("bli")) { R("ble"); break; }
        if (Ends("alli")) { R("al"); break; }
        if (Ends("entli")) { R("ent"); break; }
        if (Ends("eli")) { R("e"); break; }
        if (Ends("ousli")) { R("ous"); break; }
        break;
      case 'o':
        if (Ends("ization")) { R("ize"); break; }
        if (Ends("ation")) { R("ate"); break; }
        if (Ends("ator")) { R("ate"); break; }
        break;
      case 's':
        if (Ends("alism")) { R("al"); break; }
        if (Ends("iveness")) { R("ive"); break; }
        if (Ends("fulness")) { R("ful"); break; }
        if (Ends("ousness")) { R("ous"); break; }
        break;
      case 't':
        if (Ends("aliti")) { R("al"); break; }
        if (Ends("iviti")) { R("ive"); break; }
        if (Ends("biliti")) { R("ble"); break; }
        break;
      case 'g':
        if (Ends("logi")) { R("log"); break; }
        break;
      default:
        break;
    }
  }

  void Step3() {
    switch (b_.back()) {
      case 'e':
        if (Ends("icate")) { R("ic"); break; }
        if (Ends("ative")) { R(""); break; }
        if (Ends("alize")) { R("al"); break; }
        break;
      case 'i':
        if (Ends("iciti")) { R("ic"); break; }
        break;
      case 'l':
        if (Ends("ical")) { R("ic"); break; }
        if (Ends("ful")) { R(""); break; }
        break;
      case 's':
        if (Ends("ness")) { R(""); break; }
        break;
      default:
        break;
    }
  }

  void Step4() {
    if (b_.size() < 2) return;
    bool matched = false;
    switch (b_[b_.size() - 2]) {
      case 'a': matched = Ends("al"); break;
      case 'c': matched = Ends("ance") || Ends("ence"); break;
      case 'e': matched = Ends("er"); break;
      case 'i': matched = Ends("ic"); break;
      case 'l': matched = Ends("able") || Ends("ible"); break;
      case 'n':
        matched = Ends("ant") || Ends("ement") || Ends("ment") || Ends("ent");
        break;
      case 'o':
        if (Ends("ion") && j_ > 0 && (b_[j_ - 1] == 's' || b_[j_ - 1] == 't')) {
          matched = true;
        } else {
          matched = Ends("ou");
        }
        break;
      case 's': matched = Ends("ism"); break;
      case 't': matched = Ends("ate") || Ends("iti"); break;
      case 'u': matched = Ends("ous"); break;
      case 'v': matched = Ends("ive"); break;
      case 'z': matched = Ends("ize"); break;
      default: break;
    }
    if (matched && M() > 1) b_.resize(j_);
  }

  void Step5() {
    j_ = b_.size();
    if (b_.back() == 'e') {
      j_ = b_.size() - 1;
      int m = M();
      if (m > 1 || (m == 1 && !Cvc(b_.size() - 2))) b_.pop_back();
    }
    j_ = b_.size();
    if (b_.back() == 'l' && DoubleC(b_.size() - 1) && M() > 1) b_.pop_back();
  }

  std::string b_;
  size_t j_ = 0;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  if (!std::all_of(word.begin(), word.end(),
                   [](char c) { return c >= 'a' && c <= 'z'; })) {
    return std::string(word);
  }
  return Stemmer(std::string(word)).Run();
}

}  // namespace veridict::text
