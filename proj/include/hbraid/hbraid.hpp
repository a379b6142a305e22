#pragma once

#include "hbraid/error.hpp"
#include "hbraid/word.hpp"
#include "hbraid/perm.hpp"
#include "hbraid/presentation.hpp"
#include "hbraid/io.hpp"
#include "hbraid/magnus.hpp"
#include "hbraid/dehornoy.hpp"
#include "hbraid/smith.hpp"
#include "hbraid/subgroup.hpp"
#include "hbraid/verify.hpp"
#include "hbraid/extension.hpp"
#include "hbraid/todd_coxeter.hpp"
