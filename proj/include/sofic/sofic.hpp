#pragma once

#include "sofic/core/error.hpp"
#include "sofic/core/graph.hpp"
#include "sofic/core/hash.hpp"
#include "sofic/core/text.hpp"
#include "sofic/core/word.hpp"
#include "sofic/entropy/entropy.hpp"
#include "sofic/finsemi/apex.hpp"
#include "sofic/finsemi/enumerate.hpp"
#include "sofic/finsemi/finite_semigroup.hpp"
#include "sofic/finsemi/green.hpp"
#include "sofic/finsemi/group.hpp"
#include "sofic/finsemi/io.hpp"
#include "sofic/finsemi/morphism.hpp"
#include "sofic/finsemi/partial_transformation.hpp"
#include "sofic/finsemi/row_monomial.hpp"
#include "sofic/finsemi/subgroup.hpp"
#include "sofic/idempotent/loop_language.hpp"
#include "sofic/idempotent/zimin.hpp"
#include "sofic/shift/dfa.hpp"
#include "sofic/shift/factor.hpp"
#include "sofic/shift/higher_block.hpp"
#include "sofic/shift/presentation.hpp"
#include "sofic/shift/witness.hpp"
#include "sofic/syntactic/aggm.hpp"
#include "sofic/syntactic/fischer.hpp"
#include "sofic/syntactic/syntactic.hpp"
#include "sofic/wreath/block_matrix.hpp"
#include "sofic/wreath/cover.hpp"
#include "sofic/wreath/rees.hpp"
#include "sofic/wreath/representation.hpp"
#include "sofic/wreath/structure.hpp"
