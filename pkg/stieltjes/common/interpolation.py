r"""Stieltjes toolkit: environment variable interpolation.

The functions within this file allow configuration strings to refer to environment
variables, in the same way that shells and Dockerfiles allow ${SOME_VALUE}.

This lets a run file or a batch script say, for instance:

    output_path: ${RESULTS_DIR}/gamma_table.csv

or lets a Toolkit be sized from the environment:

    toolkit = Toolkit(n_max="${STIELTJES_N_MAX}")

A double dollar sign escapes interpolation, so $${TEXT} is passed through as ${TEXT}.
Names that are not set in the environment are left as the bare name, which makes a
missing variable easy to spot in the resulting path or in the error raised when a
numeric setting cannot be parsed.
"""

import logging
import os
import re
from typing import Optional, Union

from stieltjes.common.exceptions import InvalidConfiguration


class VariableInterpolator:
    """Variable interpolation class.

    The regex pattern is compiled once per interpolator, so a single instance should be reused
    when a whole run file is interpolated.
    """

    def __init__(self):
        """Configure the interpolation regex pattern.

        The pattern matches ${text} but not $${text}, and captures only the inner name.
        """
        self._pattern = re.compile(r"(?<!\$)\$\{(\w+)\}")

        self.logger = logging.getLogger(__name__)
        self.logger.debug("Instantiating a Variable Interpolator")

    def interpolate(self, input_string: Optional[str]) -> Optional[str]:
        """Replace each ${NAME} in the string with the value of the NAME environment variable."""
        if not input_string:
            return None

        output_string = input_string
        for match in self._pattern.findall(input_string):
            self.logger.debug("Interpolating the environment variable: %s", match)
            output_string = output_string.replace(f"${{{match}}}", os.environ.get(match, match))

        return output_string.replace("$$", "$")

    def interpolate_int(self, setting: str, value: Union[int, str, None]) -> Optional[int]:
        """Interpolate an integer setting, which may already be an integer."""
        if value is None or isinstance(value, int):
            return value

        text = self.interpolate(value)
        try:
            return int(text)
        except (TypeError, ValueError) as exc:
            raise InvalidConfiguration(
                f"Setting {setting} interpolated to {text!r}, which is not an integer"
            ) from exc
