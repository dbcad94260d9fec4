from unittest.mock import mock_open

import numwall.configuration
import pytest
from numwall.exceptions import InvalidConfigKey


class MockConfig:

    def __init__(self, read_data='{"section": {"key": "value"}}'):
        self.open = mock_open(read_data=read_data)

    @property
    def parent(self):
        return self

    def mkdir(self, *args, **kwargs):
        return True


def test_dict():
    config = numwall.configuration.Configuration(MockConfig())
    assert config.raw_dict == {'section': {'key': 'value'}}
    assert len(config) == 1
    assert next(iter(config)) == 'section.key'


def test_dict_file_not_found():
    m_config = MockConfig()
    m_config.open.side_effect = FileNotFoundError
    config = numwall.configuration.Configuration(m_config)
    assert config.raw_dict == {}
    assert len(config) == 0


def test_empty_file():
    config = numwall.configuration.Configuration(MockConfig(read_data=''))
    assert config.raw_dict == {}


def test_get():
    config = numwall.configuration.Configuration(MockConfig())
    assert config['section.key'] == 'value'
    assert config.get('section.missing') is None
    assert config.get('other.key', 'default') == 'default'


def test_get_bad_key():
    config = numwall.configuration.Configuration(MockConfig())
    with pytest.raises(InvalidConfigKey):
        config['key']


def test_integer():
    config = numwall.configuration.Configuration(
        MockConfig('{"search": {"max_period": "9"}, "render": {"scale": "big"}}'))
    assert config.integer('search.max_period') == 9
    assert config.integer('wall.integer_max_rows') == 32
    with pytest.raises(InvalidConfigKey):
        config.integer('render.scale')
    with pytest.raises(KeyError):
        config.integer('section.unknown')


def test_set():
    mock = MockConfig()
    config = numwall.configuration.Configuration(mock)
    config['section.new_key'] = 'other_value'
    mock.open.assert_called_with('w+')

    # new sections don't raise errors
    config['section2.new_key'] = 12
    handle = mock.open()
    written = ''.join(call.args[0] for call in handle.write.call_args_list)
    assert "new_key: '12'" in written


def test_del():
    mock = MockConfig()
    config = numwall.configuration.Configuration(mock)
    del config['section.key']
    mock.open.assert_called_with('w+')

    with pytest.raises(KeyError):
        del config['section2.new_key']
