# Copyright (c) 2018-present Invforge Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


class InvforgeException(Exception):

    MESSAGE = None
    EXIT_CODE = 1

    def __str__(self):  # pragma: no cover
        if self.MESSAGE:
            return self.MESSAGE.format(*self.args)
        return Exception.__str__(self)


class ReturnErrorCode(InvforgeException):

    MESSAGE = "{0}"


class UsageException(InvforgeException):

    EXIT_CODE = 2


class DegenerateException(InvforgeException):

    EXIT_CODE = 3


#
# Symbolic kernel
#


class CyclicSubstitution(InvforgeException):

    MESSAGE = "Cyclic substitution: '{0}' occurs in a replacement"


class DivisionByZeroPolynomial(InvforgeException):

    MESSAGE = "Denominator '{0}' normalizes to the zero polynomial"


class UnsupportedForm(InvforgeException):

    MESSAGE = ("Transcendental subterms of '{0}' cannot be cleared in exact "
               "mode, use the probabilistic mode")


class UnboundSymbol(InvforgeException):

    MESSAGE = "Symbol '{0}' is not bound at the evaluation point"


class NumericDomain(InvforgeException):

    MESSAGE = "Numeric domain error while evaluating '{0}': {1}"


#
# Parser
#


class ExprSyntaxError(UsageException):

    MESSAGE = "Syntax error at line {1}, column {2}: {0}"

    @property
    def line(self):
        return self.args[1]

    @property
    def column(self):
        return self.args[2]


class UnknownIdentifier(UsageException):

    MESSAGE = ("Unknown identifier '{0}' at line {1}, column {2} "
               "(allowed: u, v, ux, exp, log, sin, cos)")


#
# Group action and moving frame
#


class SingularGroupElement(InvforgeException):

    MESSAGE = "Singular group element: {0}"


class MissingJet(InvforgeException):

    MESSAGE = "Jet f_{0}{1} is required but was not supplied"


class FrameUnsolvable(InvforgeException):

    MESSAGE = ("Normalization equation for phi^({0}) does not determine it "
               "(internal error, the regular stratum is assumed)")


class FrameOrderTooLow(InvforgeException):

    MESSAGE = "Moving frame of order {0} cannot invariantize order {1}"


#
# Invariant algebra
#


class InvalidIndex(UsageException):

    MESSAGE = "Invalid invariant index ({0}, {1}): {2}"


class InvalidOrder(UsageException):

    MESSAGE = "Invalid order {0}: {1}"


class GeneratorDegenerate(DegenerateException):

    MESSAGE = ("The I03 generator formula degenerates at {0}: "
               "D_u^i I11 + D_v^i I11 vanishes")


class NoRegularPoint(DegenerateException):

    MESSAGE = ("No regular point (W != 0) found for f = {0} after {1} "
               "attempts")


#
# Settings, state and schemas
#


class InvalidSettingName(UsageException):

    MESSAGE = "Invalid setting with the name '{0}'"


class InvalidSettingValue(UsageException):

    MESSAGE = "Invalid value '{0}' for the setting '{1}'"


class HomeDirPermissionsError(InvforgeException):

    MESSAGE = (
        "The directory `{0}` or its parent directory is not owned by the "
        "current user and Invforge can not store configuration data. \n"
        "Please check the permissions and owner of that directory. \n"
        "Otherwise, please remove manually `{0}` directory and Invforge "
        "will create new from the current user.")


class IncompatibleSchema(InvforgeException):

    MESSAGE = "Schema '{0}' v{1} is not compatible with v{2}"
