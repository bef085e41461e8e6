#ifndef BAXTER_BAXTER_HPP
#define BAXTER_BAXTER_HPP

#include "baxter/coeff.hpp"
#include "baxter/complete.hpp"
#include "baxter/error.hpp"
#include "baxter/ideals.hpp"
#include "baxter/linalg.hpp"
#include "baxter/serialize.hpp"
#include "baxter/shuffle.hpp"
#include "baxter/text.hpp"
#include "baxter/witnesses.hpp"

#endif
