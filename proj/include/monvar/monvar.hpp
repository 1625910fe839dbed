#ifndef MONVAR_MONVAR_HPP_
#define MONVAR_MONVAR_HPP_

#include "monvar/blocks.hpp"
#include "monvar/derivation.hpp"
#include "monvar/families.hpp"
#include "monvar/finite_monoid.hpp"
#include "monvar/letter.hpp"
#include "monvar/random_words.hpp"
#include "monvar/varieties.hpp"
#include "monvar/verify.hpp"
#include "monvar/word.hpp"

#endif  // MONVAR_MONVAR_HPP_
