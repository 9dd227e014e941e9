/*
   Copyright 2026 The kkpencil Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KKP_KKP_HPP
#define KKP_KKP_HPP

#include "kkp/actions.hpp"
#include "kkp/automorphism.hpp"
#include "kkp/curve.hpp"
#include "kkp/cyclotomic.hpp"
#include "kkp/errors.hpp"
#include "kkp/extensions.hpp"
#include "kkp/finite_group.hpp"
#include "kkp/group.hpp"
#include "kkp/polynomial.hpp"
#include "kkp/quotients.hpp"
#include "kkp/report.hpp"
#include "kkp/signature.hpp"
#include "kkp/word.hpp"

#endif  // KKP_KKP_HPP
