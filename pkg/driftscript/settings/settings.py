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
import os
from typing import List, Optional

import xdg.BaseDirectory
from configobj import ConfigObj, ConfigObjError, flatten_errors, get_extra_values

from driftscript import __productname__

try:
    # Available from configobj 5.1.0
    from configobj.validate import Validator
except ModuleNotFoundError:
    from validate import Validator

from ..custom_types import Configuration
from ..frontend import Limits
from .exceptions import CannotParseConfigFileError, InvalidSettingsError
from .utils import config_key_list, expand_path

logger = logging.getLogger('driftscript')
SPECPATH = os.path.join(os.path.dirname(__file__), 'driftc.spec')


def find_configuration_file() -> Optional[str]:
    """Return the configuration filename.

    The paths searched are the ones described in the XDG Base Directory
    Standard, e.g. ~/.config/driftscript/config. Returns None if none of them
    exists.
    """
    paths = [os.path.join(path, __productname__, 'config')
             for path in xdg.BaseDirectory.xdg_config_dirs]
    for path in paths:
        if os.path.exists(path):
            return path
    return None


def get_config(config_path: Optional[str]=None) -> ConfigObj:
    """reads the config file, validates it and return a config dict

    Without any config file the defaults from the configspec are returned.

    :param config_path: path to a custom config file, if none is given the
                        default locations will be searched
    :returns: configuration
    """
    if config_path is None:
        config_path = find_configuration_file()
    elif not os.path.exists(config_path):
        logger.fatal(f'cannot find the config file {config_path}')
        raise InvalidSettingsError()

    if config_path is None:
        logger.debug('no config file found, using defaults')
    else:
        logger.debug(f'using the config file at {config_path}')

    try:
        user_config = ConfigObj(config_path,
                                configspec=SPECPATH,
                                interpolation=False,
                                file_error=config_path is not None,
                                )
    except ConfigObjError as error:
        logger.fatal('parsing the config file with the following error: '
                     f'{error}')
        raise CannotParseConfigFileError()

    fdict = {'config_key_list': config_key_list,
             'expand_path': expand_path,
             }
    validator = Validator(fdict)
    results = user_config.validate(validator, preserve_errors=True)

    abort = False
    for section, key, config_error in flatten_errors(user_config, results):
        abort = True
        if key is None:
            logger.fatal(f'config error:\nmissing section {sectionize(section)}')
        else:
            logger.fatal(
                'config error:\n'
                f'in {sectionize(section)} {key}: {config_error}')

    if abort or not results:
        raise InvalidSettingsError()

    extras = get_extra_values(user_config)
    for section, value in extras:
        if section == ():
            logger.warning(f'unknown section "{value}" in config file')
        else:
            logger.warning(
                f'unknown key or subsection "{value}" in section "{sectionize(section)}"')
    return user_config


def limits_from_config(conf: Configuration) -> Limits:
    """the `[limits]` section as the compiler's capacity bounds"""
    return Limits(**conf['limits'])


def sectionize(sections: List[str], depth: int=1) -> str:
    """converts list of string into [list][[of]][[[strings]]]"""
    if not sections:
        return ''
    this_part = depth * '[' + sections[0] + depth * ']'
    if len(sections) > 1:
        return this_part + sectionize(sections[1:], depth=depth + 1)
    else:
        return this_part
