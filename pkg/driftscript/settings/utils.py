# Copyright (c) 2025-2026 driftscript contributors
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
# LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#
import logging
import re
from os.path import expanduser, expandvars
from typing import List, Optional, Union

try:
    # Available from configobj 5.1.0
    from configobj.validate import VdtTypeError, VdtValueError
except ModuleNotFoundError:
    from validate import VdtTypeError, VdtValueError

logger = logging.getLogger('driftscript')

_IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


def config_key_list(value: Union[str, List[str]]) -> List[str]:
    """checks that every entry is usable as an engine config key

    raises a VdtValueError if one of them is not a plain identifier
    """
    if isinstance(value, str):
        value = [value]
    if not isinstance(value, list):
        raise VdtTypeError(value)
    keys = []
    for key in value:
        key = key.strip()
        if not _IDENTIFIER.fullmatch(key):
            raise VdtValueError(f"Invalid config key '{key}', must be an identifier")
        if key not in keys:
            keys.append(key)
    if not keys:
        raise VdtValueError('At least one config key is required')
    return keys


def expand_path(path: Optional[str]) -> Optional[str]:
    """expands `~` as well as variable names"""
    if path is None:
        return None
    return expanduser(expandvars(path))
